#include "images.hpp"

#include "errors.hpp"

#include <algorithm>

namespace ccov {

namespace {

void require_nonnegative(const Interval& iv, const char* which) {
    if (iv.lo > iv.hi) fail(errc::empty_interval, std::string(which) + " interval has lo > hi");
    if (iv.lo < 0)
        fail(errc::negative_input,
             std::string(which) + " interval must be nonnegative, got lo = " +
                 fraction_string(iv.lo));
}

void require_k(int k) {
    if (k < 1) fail(errc::invalid_argument, "exponent k must be >= 1");
}

PairDecomposition decompose_common(int k, const BasicInterval& I, const BasicInterval& J,
                                   const Rational& lambda) {
    require_lambda_range(lambda);
    if (I.rank != J.rank)
        fail(errc::rank_mismatch, "pair decomposition needs equal ranks, got " +
                                      std::to_string(I.rank) + " and " + std::to_string(J.rank));
    Rational step = rational_pow(lambda, static_cast<unsigned>(I.rank));     // L^n
    Rational sub = step * lambda;                                            // L^(n+1)
    Rational a = I.left.eval(lambda);
    Rational b = J.left.eval(lambda);

    Interval i0{a, a + sub}, i1{a + step - sub, a + step};
    Interval j0{b, b + sub}, j1{b + step - sub, b + step};

    PairDecomposition d;
    d.parts = {image_fk(k, i0, j0), image_fk(k, i0, j1), image_fk(k, i1, j0),
               image_fk(k, i1, j1)};
    std::stable_sort(d.parts.begin(), d.parts.end(), [](const Interval& x, const Interval& y) {
        return x.lo != y.lo ? x.lo < y.lo : x.hi < y.hi;
    });
    return d;
}

} // namespace

Interval image_f(const Interval& x, const Interval& y) { return image_fk(1, x, y); }

Interval image_fk(int k, const Interval& x, const Interval& y) {
    require_k(k);
    require_nonnegative(x, "x");
    require_nonnegative(y, "y");
    unsigned e = static_cast<unsigned>(k);
    return Interval{rational_pow(x.lo, e) * y.lo, rational_pow(x.hi, e) * y.hi};
}

PairDecomposition decompose_f(const BasicInterval& I, const BasicInterval& J,
                              const Rational& lambda) {
    return decompose_common(1, I, J, lambda);
}

PairDecomposition decompose_fk(int k, const BasicInterval& I, const BasicInterval& J,
                               const Rational& lambda) {
    require_k(k);
    return decompose_common(k, I, J, lambda);
}

bool covers(const PairDecomposition& d) {
    for (int i = 0; i < 3; ++i)
        if (d.parts[i].hi < d.parts[i + 1].lo) return false;
    return true;
}

bool double_covers(const PairDecomposition& d) {
    return d.parts[2].lo < d.parts[0].hi && d.parts[3].lo < d.parts[1].hi;
}

Interval double_cover_window(int n, const Rational& a, const Rational& b,
                             const Rational& lambda) {
    require_lambda_range(lambda);
    if (n < 0) fail(errc::invalid_argument, "rank must be >= 0");
    Rational step = rational_pow(lambda, static_cast<unsigned>(n));
    return Interval{a * b + a * (1 - lambda) * step, (a + step) * (b + step * lambda)};
}

bool relation_holds(const Rational& lhs, std::string_view relation, const Rational& rhs) {
    if (relation == "<=") return lhs <= rhs;
    if (relation == "<") return lhs < rhs;
    if (relation == ">=") return lhs >= rhs;
    if (relation == ">") return lhs > rhs;
    fail(errc::invalid_argument, "unknown relation '" + std::string(relation) + "'");
}

namespace {

bool push_check(std::vector<Comparison>* detail, std::string label, Rational lhs,
                std::string relation, Rational rhs) {
    bool ok = relation_holds(lhs, relation, rhs);
    if (detail)
        detail->push_back(Comparison{std::move(label), std::move(lhs), std::move(rhs),
                                     std::move(relation), ok});
    return ok;
}

} // namespace

bool window_condition(const BasicInterval& I, const BasicInterval& J, const Rational& lambda,
                      std::vector<Comparison>* detail) {
    require_lambda_range(lambda);
    if (I.rank != J.rank)
        fail(errc::rank_mismatch, "window condition needs equal ranks");
    Rational a = I.left.eval(lambda);
    Rational b = J.left.eval(lambda);
    if (a > b)
        fail(errc::order_violation, "window condition requires left(I) <= left(J)");
    Rational step = rational_pow(lambda, static_cast<unsigned>(I.rank));

    bool ok1 = push_check(detail, "lower bound", (1 - lambda - lambda * lambda) * (a + step) / lambda,
                          "<=", b);
    bool ok2 = push_check(detail, "upper bound", b + step, "<=",
                          a * lambda / (1 - 2 * lambda));
    return ok1 && ok2;
}

bool fk_window_condition(int k, const BasicInterval& I, const BasicInterval& J,
                         const Rational& lambda, bool strengthened,
                         std::vector<Comparison>* detail) {
    require_k(k);
    require_lambda_range(lambda);
    if (I.rank != J.rank)
        fail(errc::rank_mismatch, "window condition needs equal ranks");
    Rational a = I.left.eval(lambda);
    Rational b = J.left.eval(lambda);
    Rational step = rational_pow(lambda, static_cast<unsigned>(I.rank));

    bool ok1 = push_check(detail, "lower bound",
                          (1 - 2 * lambda) * (a + k * step) / (k * lambda), "<=", b);
    Rational lhs2 = strengthened ? b + step : b;
    bool ok2 = push_check(detail, "upper bound", lhs2, "<=",
                          a / (k * (1 - 2 * lambda)));
    return ok1 && ok2;
}

bool binomial_tail_bound(int k, int n, const Rational& a, const Rational& b,
                         const Rational& lambda) {
    if (k < 2) fail(errc::invalid_argument, "binomial tail bound needs k >= 2");
    if (n < 0) fail(errc::invalid_argument, "rank must be >= 0");
    if (a < 0 || b < 0) fail(errc::negative_input, "endpoints must be nonnegative");
    require_lambda_range(lambda);

    // c_i = C(k,i) * a^(k-i) * L^(n*i), built incrementally over i.
    std::vector<Rational> c(static_cast<size_t>(k) + 1);
    Rational ln = rational_pow(lambda, static_cast<unsigned>(n));
    Integer binom = 1;
    for (int i = 0; i <= k; ++i) {
        if (i > 0) binom = binom * (k - i + 1) / i;
        c[static_cast<size_t>(i)] = Rational(binom) *
                                    rational_pow(a, static_cast<unsigned>(k - i)) *
                                    rational_pow(ln, static_cast<unsigned>(i));
    }

    Rational lhs(0), rhs(0);
    for (int i = 2; i <= k; ++i) lhs += c[static_cast<size_t>(i)];
    lhs *= (1 - 2 * lambda) * b;
    for (int i = 1; i <= k - 1; ++i)
        rhs += c[static_cast<size_t>(i)] * rational_pow(lambda, static_cast<unsigned>(n + i));
    return lhs < rhs;
}

} // namespace ccov
