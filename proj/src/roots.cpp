#include "roots.hpp"

#include "errors.hpp"

namespace ccov {

bool valid_bracket(const LambdaPoly& p, const RootBracket& bracket) {
    if (bracket.degenerate()) return p.sign_at(bracket.lo) == 0;
    if (bracket.lo > bracket.hi) return false;
    int slo = p.sign_at(bracket.lo);
    int shi = p.sign_at(bracket.hi);
    return slo != 0 && shi != 0 && slo != shi;
}

RootBracket isolate_root(const LambdaPoly& p, RootBracket bracket, const Rational& width) {
    if (width <= 0) fail(errc::invalid_argument, "bracket width must be positive");
    if (bracket.degenerate()) {
        if (p.sign_at(bracket.lo) != 0)
            fail(errc::invalid_bracket, "degenerate bracket not at a root");
        return bracket;
    }
    int slo = p.sign_at(bracket.lo);
    int shi = p.sign_at(bracket.hi);
    if (bracket.lo > bracket.hi || slo == 0 || shi == 0 || slo == shi)
        fail(errc::invalid_bracket,
             "isolate_root needs opposite nonzero signs at the bracket endpoints");

    while (bracket.hi - bracket.lo > width) {
        Rational mid = bracket.midpoint();
        int sm = p.sign_at(mid);
        if (sm == 0) return RootBracket{mid, mid};
        if (sm == slo)
            bracket.lo = mid;
        else
            bracket.hi = mid;
    }
    return bracket;
}

RootBracket bisect_once(const LambdaPoly& p, const RootBracket& bracket) {
    if (bracket.degenerate()) return bracket;
    Rational mid = bracket.midpoint();
    int sm = p.sign_at(mid);
    if (sm == 0) return RootBracket{mid, mid};
    if (sm == p.sign_at(bracket.lo)) return RootBracket{mid, bracket.hi};
    return RootBracket{bracket.lo, mid};
}

} // namespace ccov
