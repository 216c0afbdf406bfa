#include "interval_union.hpp"

#include "errors.hpp"

#include <algorithm>

namespace ccov {

bool IntervalUnion::contains(const Rational& x) const {
    // parts are sorted and disjoint; binary search on lo.
    auto it = std::upper_bound(parts.begin(), parts.end(), x,
                               [](const Rational& v, const Interval& iv) { return v < iv.lo; });
    if (it == parts.begin()) return false;
    --it;
    return x <= it->hi;
}

bool IntervalUnion::contains(const Interval& iv) const {
    auto it = std::upper_bound(parts.begin(), parts.end(), iv.lo,
                               [](const Rational& v, const Interval& p) { return v < p.lo; });
    if (it == parts.begin()) return false;
    --it;
    return iv.lo >= it->lo && iv.hi <= it->hi;
}

IntervalUnion union_normalize(std::vector<Interval> parts) {
    for (const Interval& iv : parts)
        if (iv.lo > iv.hi)
            fail(errc::empty_interval, "interval with lo > hi: " + to_string(iv));
    std::sort(parts.begin(), parts.end(), [](const Interval& x, const Interval& y) {
        return x.lo != y.lo ? x.lo < y.lo : x.hi < y.hi;
    });
    IntervalUnion u;
    for (Interval& iv : parts) {
        if (!u.parts.empty() && iv.lo <= u.parts.back().hi) {
            if (iv.hi > u.parts.back().hi) u.parts.back().hi = std::move(iv.hi);
        } else {
            u.parts.push_back(std::move(iv));
        }
    }
    return u;
}

} // namespace ccov
