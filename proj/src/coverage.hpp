#pragma once

#include "interval_union.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace ccov {

// Union plus the open holes between its parts (within the union's hull).
struct GapReport {
    IntervalUnion covered;
    std::vector<Interval> gaps; // endpoints of open intervals
};

// Exact union of [x.lo^k * y.lo, x.hi^k * y.hi] over all ordered pairs (x, y)
// of rank-`rank` basic intervals.  Contains the true image of the k-th power
// product over the Cantor square, since the rank-m intervals contain the set.
// Pair evaluation is distributed over hardware threads for large ranks; the
// result does not depend on the schedule.
IntervalUnion image_union_fk(int k, const Rational& lambda, int rank);

// The hull of u with u removed, as open intervals.  u must lie inside [0, 1].
GapReport find_gaps(const IntervalUnion& u);

// Two one-sided facts every report must carry: finite rank refutes but never
// certifies full coverage.
extern const char* const kGapNoteRefutes;
extern const char* const kGapNoteNoCertify;

nlohmann::ordered_json gap_report_json(const GapReport& report, int k,
                                       const Rational& lambda, int rank);
std::string gap_report_text(const GapReport& report, int k, const Rational& lambda,
                            int rank);
std::string gap_report_csv(const GapReport& report);

} // namespace ccov
