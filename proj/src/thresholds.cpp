#include "thresholds.hpp"

#include "cantor.hpp"
#include "errors.hpp"

namespace ccov {

namespace {

const Rational kQuarter{1, 4};
const Rational kHalf{1, 2};

// lambda*b - (1 - lambda - lambda^2)*(a + lambda^n), the lower window
// inequality cleared by its positive denominator lambda.
LambdaPoly lower_window_poly(const LambdaPoly& a, const LambdaPoly& b, unsigned n) {
    return LambdaPoly::monomial(1) * b -
           LambdaPoly{1, -1, -1} * (a + LambdaPoly::monomial(n));
}

// lambda*a - (1 - 2*lambda)*(b + lambda^n), the upper window inequality
// cleared by (1 - 2*lambda) > 0.
LambdaPoly upper_window_poly(const LambdaPoly& a, const LambdaPoly& b, unsigned n) {
    return LambdaPoly::monomial(1) * a -
           LambdaPoly{1, -2} * (b + LambdaPoly::monomial(n));
}

struct Selected {
    LambdaPoly binding;
    std::optional<LambdaPoly> secondary;
    std::optional<RootBracket> secondary_bracket;
};

// Of the two inequality polynomials, the binding one is the one whose root is
// larger (the condition that holds last as lambda grows).  A half with no
// sign change on the bracket holds throughout and cannot bind.
Selected select_binding(const LambdaPoly& first, const LambdaPoly& second) {
    const RootBracket base{kQuarter, kHalf};
    bool v1 = valid_bracket(first, base);
    bool v2 = valid_bracket(second, base);
    if (v1 && !v2) return {first, second, std::nullopt};
    if (v2 && !v1) return {second, first, std::nullopt};
    if (!v1 && !v2)
        fail(errc::invalid_bracket, "neither inequality vanishes on the catalog bracket");
    const Rational fine{1, 1000000000};
    Rational m1 = isolate_root(first, base, fine).midpoint();
    Rational m2 = isolate_root(second, base, fine).midpoint();
    if (m1 >= m2) return {first, second, base};
    return {second, first, base};
}

std::vector<ThresholdEntry> build_catalog() {
    const RootBracket base{kQuarter, kHalf};
    std::vector<ThresholdEntry> cat;
    cat.reserve(22);

    const auto& st = st_catalog_pairs();
    std::vector<LambdaPoly> a, b;
    for (const AddressPair& p : st) {
        a.push_back(address_left_poly(p.i));
        b.push_back(address_left_poly(p.j));
    }

    // The first two pairs: both halves catalogued individually.
    const char* step_quotes[4] = {"0.4258", "0.3377", "0.4094", "0.3474"};
    for (int p = 0; p < 2; ++p) {
        cat.push_back({"stepII_cond(" + std::to_string(2 * p + 1) + ")",
                       lower_window_poly(a[p], b[p], 3), base, step_quotes[2 * p],
                       std::nullopt, std::nullopt});
        cat.push_back({"stepII_cond(" + std::to_string(2 * p + 2) + ")",
                       upper_window_poly(a[p], b[p], 3), base, step_quotes[2 * p + 1],
                       std::nullopt, std::nullopt});
    }

    // Pairs three to six: one row each, binding half selected.
    const char* row_quotes[4] = {"0.4274", "0.3993", "0.4302", "0.4076"};
    for (int r = 0; r < 4; ++r) {
        int p = r + 2;
        Selected sel = select_binding(lower_window_poly(a[p], b[p], 3),
                                      upper_window_poly(a[p], b[p], 3));
        cat.push_back({"table1_row(" + std::to_string(r + 1) + ")", sel.binding, base,
                       row_quotes[r], sel.secondary, sel.secondary_bracket});
    }

    // Overlap chain between consecutive pair images, right to left: the next
    // image's right end must exceed the previous image's left end.
    const LambdaPoly m3 = LambdaPoly::monomial(3);
    const char* chain_quotes[5] = {"0.3377", "0.3290", "0.4198", "0.4084", "0.3391"};
    for (int i = 0; i < 5; ++i) {
        LambdaPoly chain = (a[i + 1] + m3) * (b[i + 1] + m3) - a[i] * b[i];
        cat.push_back({"chain_ineq(" + std::to_string(i + 1) + ")", chain, base,
                       chain_quotes[i], std::nullopt, std::nullopt});
    }

    // The binding constant of the whole product catalog: the entry above with
    // the largest root.
    {
        const Rational fine{1, 1000000000};
        size_t best = 0;
        Rational best_mid{-1};
        for (size_t i = 0; i < cat.size(); ++i) {
            Rational mid = isolate_root(cat[i].poly, cat[i].bracket, fine).midpoint();
            if (mid > best_mid) {
                best_mid = mid;
                best = i;
            }
        }
        cat.push_back({"theorem_constant", cat[best].poly, cat[best].bracket, "0.4302",
                       std::nullopt, std::nullopt});
    }

    const auto& circ = circle_catalog_pairs();
    std::vector<LambdaPoly> ca, cb;
    for (const AddressPair& p : circ) {
        ca.push_back(address_left_poly(p.i));
        cb.push_back(address_left_poly(p.j));
    }

    const char* circle_quotes[4] = {"0.446", "0.400", "0.459", "0.431"};
    for (int p = 0; p < 4; ++p) {
        Selected sel = select_binding(lower_window_poly(ca[p], cb[p], 2),
                                      upper_window_poly(ca[p], cb[p], 2));
        cat.push_back({"circle_cond(" + std::to_string(p + 1) + ")", sel.binding, base,
                       circle_quotes[p], sel.secondary, sel.secondary_bracket});
    }

    // Squared-sum images [a^2 + b^2, (a + L^2)^2 + (b + L^2)^2] must chain the
    // same way, and the last must be reached from above by the scaled copy of
    // the whole picture (factor 2*L^2).
    const LambdaPoly m2 = LambdaPoly::monomial(2);
    std::vector<LambdaPoly> slo, shi;
    for (int p = 0; p < 4; ++p) {
        slo.push_back(ca[p] * ca[p] + cb[p] * cb[p]);
        shi.push_back((ca[p] + m2) * (ca[p] + m2) + (cb[p] + m2) * (cb[p] + m2));
    }
    const char* overlap_quotes[4] = {"0.320", "0.350", "0.394", "0.436"};
    for (int i = 0; i < 4; ++i) {
        LambdaPoly overlap = i < 3 ? shi[i + 1] - slo[i]
                                   : LambdaPoly::monomial(2, 2) - slo[3];
        cat.push_back({"circle_overlap(" + std::to_string(i + 1) + ")", overlap, base,
                       overlap_quotes[i], std::nullopt, std::nullopt});
    }

    for (const ThresholdEntry& e : cat)
        if (!valid_bracket(e.poly, e.bracket))
            fail(errc::invalid_bracket, "catalog entry " + e.id + " has no sign change");
    return cat;
}

} // namespace

const std::vector<AddressPair>& st_catalog_pairs() {
    static const std::vector<AddressPair> pairs = {
        {"111", "111"}, {"110", "111"}, {"110", "110"},
        {"101", "110"}, {"101", "101"}, {"100", "101"},
    };
    return pairs;
}

const std::vector<AddressPair>& circle_catalog_pairs() {
    static const std::vector<AddressPair> pairs = {
        {"11", "11"}, {"10", "11"}, {"10", "10"}, {"01", "10"},
    };
    return pairs;
}

const std::vector<ThresholdEntry>& threshold_catalog() {
    static const std::vector<ThresholdEntry> cat = build_catalog();
    return cat;
}

const ThresholdEntry& named_threshold_entry(std::string_view id) {
    for (const ThresholdEntry& e : threshold_catalog())
        if (e.id == id) return e;
    fail(errc::unknown_id, "unknown threshold id '" + std::string(id) + "'");
}

RootBracket named_threshold(std::string_view id, const Rational& width) {
    const ThresholdEntry& e = named_threshold_entry(id);
    return isolate_root(e.poly, e.bracket, width);
}

LambdaPoly lambda_k_poly(int k) {
    if (k < 2) fail(errc::invalid_argument, "k must be >= 2");
    std::vector<Integer> c(static_cast<size_t>(k) + 1);
    c[0] = -(k + 1);
    c[1] = 2 * k + 2;
    c[static_cast<size_t>(k)] += k - 1;
    return LambdaPoly(c);
}

LambdaPoly r_k_poly(int k) {
    if (k < 2) fail(errc::invalid_argument, "k must be >= 2");
    return one_minus_lambda().pow(static_cast<unsigned>(k) + 1) - LambdaPoly::monomial(1);
}

RootBracket lambda_k(int k, const Rational& width) {
    return isolate_root(lambda_k_poly(k), {Rational(0), kHalf}, width);
}

RootBracket r_k(int k, const Rational& width) {
    return isolate_root(r_k_poly(k), {Rational(0), Rational(1)}, width);
}

bool check_hk_xk(int k_max) {
    if (k_max < 2) fail(errc::invalid_argument, "k_max must be >= 2");
    for (int k = 2; k <= k_max; ++k) {
        Rational x{k - 1, 2 * k - 1};
        Rational h = Rational(k - 1) * rational_pow(x, static_cast<unsigned>(k)) /
                         (k + 1) +
                     2 * x - 1;
        if (!(h < 0)) return false;
    }
    return true;
}

bool xk_below_lambda_k(int k) {
    return lambda_k_poly(k).sign_at(Rational{k - 1, 2 * k - 1}) < 0;
}

bool check_lambda_k_monotone(int k_max) {
    if (k_max < 3) fail(errc::invalid_argument, "k_max must be >= 3");
    const Rational start_width{1, 1 << 24};
    std::vector<LambdaPoly> polys;
    std::vector<RootBracket> brackets;
    for (int k = 2; k <= k_max; ++k) {
        LambdaPoly p = lambda_k_poly(k);
        if (p.sign_at(kHalf) <= 0) return false; // root must stay strictly below 1/2
        brackets.push_back(isolate_root(p, {Rational(0), kHalf}, start_width));
        polys.push_back(std::move(p));
    }
    // Consecutive roots can be closer than the initial width; refine both
    // brackets in lockstep until they separate.
    for (size_t i = 0; i + 1 < brackets.size(); ++i) {
        int guard = 0;
        while (!(brackets[i].hi < brackets[i + 1].lo)) {
            if (++guard > 512) return false;
            brackets[i] = bisect_once(polys[i], brackets[i]);
            brackets[i + 1] = bisect_once(polys[i + 1], brackets[i + 1]);
        }
    }
    return true;
}

} // namespace ccov
