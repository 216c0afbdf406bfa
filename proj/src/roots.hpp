#pragma once

#include "lambda_poly.hpp"
#include "rational.hpp"

namespace ccov {

/* Isolating interval for a polynomial root.  Two shapes are legal:
 *   lo < hi with p(lo) and p(hi) of opposite nonzero sign, or
 *   lo == hi when the root itself is rational and was hit exactly.
 */
struct RootBracket {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool degenerate() const { return lo == hi; }
};

bool valid_bracket(const LambdaPoly& p, const RootBracket& bracket);

/* Deterministic midpoint bisection.  Shrinks `bracket` until its width is at
 * most `width`; if a midpoint turns out to be an exact root the degenerate
 * bracket at that point is returned immediately.  All produced endpoints are
 * dyadic combinations of the input endpoints, so repeated calls refine
 * consistently.
 */
RootBracket isolate_root(const LambdaPoly& p, RootBracket bracket, const Rational& width);

// One bisection step; used when two brackets must be refined in lockstep.
RootBracket bisect_once(const LambdaPoly& p, const RootBracket& bracket);

} // namespace ccov
