#pragma once

#include "interval.hpp"

#include <vector>

namespace ccov {

// Finite union of closed intervals, kept sorted by left endpoint with
// overlapping or touching parts merged.  Construct via union_normalize.
struct IntervalUnion {
    std::vector<Interval> parts;

    bool contains(const Rational& x) const;
    bool contains(const Interval& iv) const;
    bool operator==(const IntervalUnion&) const = default;
};

// Sorts by lo and merges whenever the next interval starts at or before the
// current right endpoint.  Throws errc::empty_interval if any input has
// lo > hi.
IntervalUnion union_normalize(std::vector<Interval> parts);

} // namespace ccov
