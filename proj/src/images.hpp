#pragma once

#include "cantor.hpp"
#include "interval.hpp"
#include "rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace ccov {

/* Images of interval pairs under f(x, y) = x*y and f_k(x, y) = x^k * y, and
 * the exact endpoint conditions under which the four child-pair images of a
 * same-rank pair tile its full image without a gap (or cover part of it
 * twice).  These conditions are what certificates and witness trees evaluate;
 * everything here is decided by rational comparison, never by estimate.
 */

// Requires lo >= 0 on both inputs: x^k*y is monotone in each coordinate only
// on the nonnegative quadrant.
Interval image_f(const Interval& x, const Interval& y);
Interval image_fk(int k, const Interval& x, const Interval& y);

// The images of the four child pairs of (I, J), sorted by (lo, hi).  When
// left(I) <= left(J) the sorted order coincides with the pair order
// (00), (01), (10), (11).
struct PairDecomposition {
    std::array<Interval, 4> parts;
};

PairDecomposition decompose_f(const BasicInterval& I, const BasicInterval& J,
                              const Rational& lambda);
PairDecomposition decompose_fk(int k, const BasicInterval& I, const BasicInterval& J,
                               const Rational& lambda);

// Consecutive parts meet: part[i].hi >= part[i+1].lo for i = 0, 1, 2, i.e.
// the four parts union to a single interval.
bool covers(const PairDecomposition& d);

// Strict two-layer overlap: part[2].lo < part[0].hi and part[3].lo < part[1].hi.
bool double_covers(const PairDecomposition& d);

// Open interval of doubly covered products for the pair with left endpoints
// a, b at rank n: (a*b + a*(1-L)*L^n, (a+L^n)*(b+L^(n+1))).
Interval double_cover_window(int n, const Rational& a, const Rational& b,
                             const Rational& lambda);

// One exact inequality evaluated during certification.
struct Comparison {
    std::string label;
    Rational lhs;
    Rational rhs;
    std::string relation; // "<=", "<", ">=", ">"
    bool holds = false;
};

bool relation_holds(const Rational& lhs, std::string_view relation, const Rational& rhs);

/* Window condition for pairs under f: with a = left(I), b = left(J), n = rank,
 *     (1-L-L^2)*(a+L^n)/L <= b   and   b+L^n <= a*L/(1-2L).
 * Requires a <= b.  When both hold (together with the ratio range check done
 * at certificate level) every product in the pair's image interior is covered
 * twice at some deeper rank, which is the engine behind witness bifurcation.
 */
bool window_condition(const BasicInterval& I, const BasicInterval& J, const Rational& lambda,
                      std::vector<Comparison>* detail = nullptr);

/* Window condition for pairs under f_k:
 *     (1-2L)*(a+k*L^n)/(k*L) <= b   and   b+L^n <= a/(k*(1-2L)).
 * With strengthened=false the second bound drops the +L^n term.
 */
bool fk_window_condition(int k, const BasicInterval& I, const BasicInterval& J,
                         const Rational& lambda, bool strengthened = true,
                         std::vector<Comparison>* detail = nullptr);

/* Direct evaluation of the binomial-tail comparison used to chain f_k child
 * images: with c_i = C(k,i) * a^(k-i) * L^(n*i),
 *     sum_{i=2..k} c_i*(1-2L)*b  <  sum_{i=1..k-1} c_i * L^(n+i).
 */
bool binomial_tail_bound(int k, int n, const Rational& a, const Rational& b,
                         const Rational& lambda);

} // namespace ccov
