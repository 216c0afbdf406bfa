#pragma once

#include "interval.hpp"
#include "lambda_poly.hpp"
#include "rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ccov {

/* The middle Cantor set with contraction ratio L in (0, 1/2) is the attractor
 * of x -> L*x and x -> L*x + (1-L) on [0,1].  A rank-n basic interval is the
 * image of [0,1] under a length-n composition of the two maps and is indexed
 * by its digit string: digit j = 1 means the right-hand map was applied at
 * step j.  The left endpoint is sum over j with digit 1 of (1-L) * L^(j-1),
 * which we keep symbolically so that a single interval can be evaluated at
 * any ratio, compared exactly, or fed into threshold polynomials.
 */

bool valid_address(std::string_view digits);

// Symbolic left endpoint of the addressed interval.
LambdaPoly address_left_poly(std::string_view digits);

struct BasicInterval {
    std::string address;
    LambdaPoly left; // symbolic left endpoint
    int rank = 0;    // == address.size(); interval length is L^rank

    static BasicInterval from_address(std::string_view digits);

    // Evaluated endpoints [a, a + L^rank]; requires 0 < lambda < 1/2.
    Interval at(const Rational& lambda) const;
};

// The two rank-(n+1) basic subintervals, left child first.
std::pair<BasicInterval, BasicInterval> children(const BasicInterval& interval);

// Evaluated endpoints of the addressed interval.
Interval interval_of(std::string_view digits, const Rational& lambda);

// All 2^rank basic intervals of the given rank in address order, which for
// any ratio below 1/2 is also left-endpoint order.
std::vector<BasicInterval> enumerate_rank(int rank, const Rational& lambda);

void require_lambda_range(const Rational& lambda);

} // namespace ccov
