#pragma once

#include "lambda_poly.hpp"
#include "roots.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ccov {

// A catalog entry pins one critical value of lambda: the condition behind `id`
// fails below the root of `poly` and holds above it.  `poly` is normalized so
// it is negative at bracket.lo and positive at bracket.hi.
struct ThresholdEntry {
    std::string id;
    LambdaPoly poly;
    RootBracket bracket;
    std::string quoted; // published decimal approximation of the root
    // When the entry was selected as the binding half of a two-sided
    // condition, the other half is kept here.  secondary_bracket is absent if
    // the secondary polynomial never vanishes on the bracket (condition holds
    // throughout).
    std::optional<LambdaPoly> secondary;
    std::optional<RootBracket> secondary_bracket;
};

struct AddressPair {
    std::string i, j;
};

// Six rank-3 address pairs whose product images tile the top window, listed
// right to left; the first two carry individually catalogued conditions, the
// last four are Table 1 rows 1-4.
const std::vector<AddressPair>& st_catalog_pairs();
// Four rank-2 address pairs used for the squared-sum (circle) covering.
const std::vector<AddressPair>& circle_catalog_pairs();

// All 22 named critical values, in the order: stepII_cond(1..4),
// table1_row(1..4), chain_ineq(1..5), theorem_constant, circle_cond(1..4),
// circle_overlap(1..4).
const std::vector<ThresholdEntry>& threshold_catalog();
const ThresholdEntry& named_threshold_entry(std::string_view id); // UnknownId
RootBracket named_threshold(std::string_view id, const Rational& width);

// (k-1)*L^k + (2k+2)*L - (k+1); negative at 0, positive at 1/2, one root
// between.  Above that root the k-th power covering machinery applies.
LambdaPoly lambda_k_poly(int k); // k >= 2
// (1-L)^(k+1) - L; decreasing on (0,1) with a single root.
LambdaPoly r_k_poly(int k); // k >= 2

RootBracket lambda_k(int k, const Rational& width); // root in (0, 1/2)
RootBracket r_k(int k, const Rational& width);      // root in (0, 1)

// Exact rational evaluation of (k-1)*x^k/(k+1) + 2x - 1 at x = (k-1)/(2k-1)
// for every k in 2..k_max; true iff all values are negative.
bool check_hk_xk(int k_max);
// Sign certificate that (k-1)/(2k-1) lies strictly below the lambda_k root.
bool xk_below_lambda_k(int k);
// Refines the lambda_k brackets until pairwise disjoint and certifies
// lambda_2 < lambda_3 < ... < lambda_kmax < 1/2.
bool check_lambda_k_monotone(int k_max); // k_max >= 3

} // namespace ccov
