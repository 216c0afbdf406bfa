#pragma once

#include "rational.hpp"

#include <string>

namespace ccov {

// Closed interval [lo, hi] with exact rational endpoints.
struct Interval {
    Rational lo;
    Rational hi;

    bool operator==(const Interval& other) const = default;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool interior_contains(const Rational& x) const { return lo < x && x < hi; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
};

inline std::string to_string(const Interval& iv) {
    return "[" + fraction_string(iv.lo) + ", " + fraction_string(iv.hi) + "]";
}

} // namespace ccov
