#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cantor.hpp"
#include "certificates.hpp"
#include "coverage.hpp"
#include "images.hpp"
#include "interval_union.hpp"
#include "thresholds.hpp"
#include "witness.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

using namespace ccov;

/* Each test case below is one gate of the release checklist.  A gate prints
 * exactly one PASS/FAIL line (with its runtime against the budget) and then
 * asserts, so a red gate is visible both in the log and in the test summary.
 */

namespace {

class Gate {
public:
    Gate(const char* name, double budget_seconds)
        : name_(name), budget_(budget_seconds), start_(std::chrono::steady_clock::now()) {}

    void finish(bool ok, const std::string& detail) {
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        bool in_time = elapsed < budget_;
        std::printf("%s: %s - %s [%.2f s, budget %.0f s]\n", name_,
                    ok && in_time ? "PASS" : "FAIL", detail.c_str(), elapsed, budget_);
        std::fflush(stdout);
        CHECK_MESSAGE(ok, name_, ": ", detail);
        CHECK_MESSAGE(in_time, name_, ": exceeded the time budget");
    }

private:
    const char* name_;
    double budget_;
    std::chrono::steady_clock::time_point start_;
};

Rational abs_val(const Rational& v) { return v < 0 ? Rational(-v) : v; }

} // namespace

TEST_CASE("criterion 01") {
    Gate gate("criterion 01", 5.0);
    const Rational tol(5, 10000);
    const Rational width(1, 1000000000);
    std::string offenders;
    int bad = 0;
    for (const ThresholdEntry& e : threshold_catalog()) {
        Rational mid = named_threshold(e.id, width).midpoint();
        Rational delta = abs_val(mid - parse_rational(e.quoted));
        if (delta > tol) {
            ++bad;
            if (!offenders.empty()) offenders += ", ";
            offenders += e.id + " |d|=" + decimal_string(delta, 5);
        }
    }
    if (bad == 0)
        gate.finish(true, "all 22 threshold midpoints lie within 5e-4 of their quoted values");
    else
        gate.finish(false, std::to_string(bad) +
                               "/22 midpoints drift past 5e-4 from the 3-decimal quotes: " +
                               offenders);
}

TEST_CASE("criterion 02") {
    Gate gate("criterion 02", 5.0);
    RootBracket b = lambda_k(2, Rational(1, 1000000000));
    // lo <= 2*sqrt(3) - 3 <= hi, squared to stay rational.
    bool closed_form = (b.lo + 3) * (b.lo + 3) <= 12 && 12 <= (b.hi + 3) * (b.hi + 3);
    bool monotone = check_lambda_k_monotone(64);
    bool above = lambda_k_poly(2).sign_at(Rational(46, 100)) < 0;
    bool below = r_k_poly(2).sign_at(Rational(32, 100)) < 0;
    gate.finish(closed_form && monotone && above && below,
                std::string("lambda_2 bracket contains 2*sqrt(3)-3: ") +
                    (closed_form ? "yes" : "NO") + "; monotone through k=64: " +
                    (monotone ? "yes" : "NO") + "; lambda_2 > 0.46: " + (above ? "yes" : "NO") +
                    "; r_2 < 0.32: " + (below ? "yes" : "NO"));
}

TEST_CASE("criterion 03") {
    Gate gate("criterion 03", 1.0);
    IntervalUnion quartic = image_union_fk(4, Rational(1, 3), 2);
    IntervalUnion expected = union_normalize({
        Interval{Rational(0), Rational(2401, 19683)},
        Interval{Rational(32, 243), Rational(2401, 6561)},
        Interval{Rational(8192, 19683), Rational(1)},
    });
    bool quartic_ok = quartic == expected;

    IntervalUnion cubic = image_union_fk(3, Rational(1, 3), 2);
    bool cubic_ok =
        cubic.parts.size() == 1 && cubic.parts[0] == Interval{Rational(0), Rational(1)};

    gate.finish(quartic_ok && cubic_ok,
                std::string("rank-2 fourth-power union at 1/3 equals the three exact parts: ") +
                    (quartic_ok ? "yes" : "NO") + "; rank-2 cube union equals [0, 1]: " +
                    (cubic_ok ? "yes" : "NO"));
}

TEST_CASE("criterion 04") {
    Gate gate("criterion 04", 1.0);
    bool passes = true;
    for (const char* text : {"4302/10000", "44/100", "46/100", "49/100"})
        passes = passes && certify_st_continuum(parse_rational(text)).certified;

    Certificate refusal = certify_st_continuum(Rational(42, 100));
    bool names_row = false;
    for (const std::string& label : refusal.failing_labels)
        names_row = names_row || label.find("Table 1 row") != std::string::npos;
    bool fails = !refusal.certified && names_row;

    gate.finish(passes && fails,
                std::string("product certificate passes at 0.4302, 0.44, 0.46, 0.49: ") +
                    (passes ? "yes" : "NO") + "; fails at 0.42 naming a Table 1 row: " +
                    (fails ? "yes" : "NO"));
}

TEST_CASE("criterion 05") {
    Gate gate("criterion 05", 1.0);
    bool pass2 = certify_fk_coverage(2, Rational(47, 100)).certified;
    bool pass3 = certify_fk_coverage(3, Rational(48, 100)).certified;
    bool fail2 = !certify_fk_coverage(2, Rational(45, 100)).certified;
    bool fail3 = !certify_fk_coverage(3, Rational(47, 100)).certified;
    gate.finish(pass2 && pass3 && fail2 && fail3,
                std::string("k=2 certifies at 0.47 and not 0.45: ") +
                    (pass2 && fail2 ? "yes" : "NO") + "; k=3 certifies at 0.48 and not 0.47: " +
                    (pass3 && fail3 ? "yes" : "NO"));
}

TEST_CASE("criterion 06") {
    Gate gate("criterion 06", 1.0);
    bool pass = certify_circle_continuum(Rational(46, 100)).certified;
    bool fail = !certify_circle_continuum(Rational(45, 100)).certified;
    gate.finish(pass && fail, std::string("circle certificate passes at 0.46: ") +
                                  (pass ? "yes" : "NO") + "; fails at 0.45: " +
                                  (fail ? "yes" : "NO"));
}

TEST_CASE("criterion 07") {
    Gate gate("criterion 07", 30.0);
    bool ok = true;
    std::string detail;
    for (const char* target : {"1/2", "1/100", "9/10"}) {
        WitnessTree tree = build_witness_tree(Rational(9, 20), parse_rational(target), 12);
        size_t first_leaf = (static_cast<size_t>(1) << 12) - 1;
        bool shape = tree.nodes.size() == 8191;
        bool verified = verify_tree(tree);
        std::set<std::pair<std::string, std::string>> leaves;
        for (size_t i = first_leaf; i < tree.nodes.size(); ++i)
            leaves.insert({tree.nodes[i].address_i, tree.nodes[i].address_j});
        bool distinct = leaves.size() == 4096;
        ok = ok && shape && verified && distinct;
        if (!detail.empty()) detail += "; ";
        detail += std::string("t=") + target + ": " +
                  (shape && verified && distinct
                       ? "4096 distinct verified leaves"
                       : (!shape ? "wrong node count"
                                 : (!verified ? "verification failed" : "duplicate leaves")));
    }
    gate.finish(ok, detail);
}

TEST_CASE("criterion 08") {
    Gate gate("criterion 08", 60.0);
    std::mt19937 rng(987654321u);
    int tested_product = 0;
    int tested_power = 0;
    bool ok = true;
    std::string first_bad;

    for (int trial = 0; trial < 50 && ok; ++trial) {
        Rational lambda(43001 + static_cast<int>(rng() % 6999u), 100000);
        bool range_ok = LambdaPoly{1, -3, 1}.sign_at(lambda) <= 0;

        for (int n = 1; n <= 4 && ok; ++n) {
            std::vector<BasicInterval> cells = enumerate_rank(n, lambda);
            Rational step = rational_pow(lambda, static_cast<unsigned>(n));
            Rational sub = step * lambda;

            std::vector<Rational> left;
            for (const BasicInterval& c : cells) left.push_back(c.left.eval(lambda));

            for (size_t i = 0; i < cells.size() && ok; ++i) {
                for (size_t j = 0; j < cells.size() && ok; ++j) {
                    const Rational& a = left[i];
                    const Rational& b = left[j];

                    // Pair refinement for the plain product.
                    if (range_ok && a <= b && b <= (a + sub) / (1 - 2 * lambda)) {
                        ++tested_product;
                        PairDecomposition d = decompose_f(cells[i], cells[j], lambda);
                        IntervalUnion u = union_normalize({d.parts.begin(), d.parts.end()});
                        Interval full = image_f(cells[i].at(lambda), cells[j].at(lambda));
                        if (!(u.parts.size() == 1 && u.parts[0] == full)) {
                            ok = false;
                            first_bad = "product pair (" + cells[i].address + ", " +
                                        cells[j].address + ") at lambda = " +
                                        fraction_string(lambda);
                        }
                    }

                    // Pair refinement for the k-th powers above their critical values.
                    for (int k = 2; k <= 4 && ok; ++k) {
                        if (lambda_k_poly(k).sign_at(lambda) < 0) continue;
                        Rational lower = (1 - 2 * lambda) * (a + k * step) / (k * lambda);
                        Rational upper = a / (k * (1 - 2 * lambda));
                        if (!(lower <= b && b <= upper)) continue;
                        ++tested_power;
                        PairDecomposition d = decompose_fk(k, cells[i], cells[j], lambda);
                        IntervalUnion u = union_normalize({d.parts.begin(), d.parts.end()});
                        Interval full =
                            image_fk(k, cells[i].at(lambda), cells[j].at(lambda));
                        if (!(u.parts.size() == 1 && u.parts[0] == full)) {
                            ok = false;
                            first_bad = "power pair k=" + std::to_string(k) + " (" +
                                        cells[i].address + ", " + cells[j].address +
                                        ") at lambda = " + fraction_string(lambda);
                        }
                    }
                }
            }
        }
    }

    ok = ok && tested_product > 0 && tested_power > 0;
    gate.finish(ok, ok ? "decomposition union equals the full image for " +
                             std::to_string(tested_product) + " product pairs and " +
                             std::to_string(tested_power) +
                             " power pairs over 50 random ratios"
                       : (first_bad.empty() ? "hypothesis filters selected no pairs"
                                            : "first mismatch: " + first_bad));
}

TEST_CASE("criterion 09") {
    Gate gate("criterion 09", 5.0);
    bool cert_refuses = !certify_fk_coverage(4, Rational(1, 3)).certified;
    GapReport report = find_gaps(image_union_fk(4, Rational(1, 3), 2));
    bool has_gaps = !report.gaps.empty();
    gate.finish(cert_refuses && has_gaps,
                std::string("fourth-power certificate refuses at 1/3: ") +
                    (cert_refuses ? "yes" : "NO") + "; rank-2 outer approximation shows " +
                    std::to_string(report.gaps.size()) + " gaps");
}

TEST_CASE("criterion 10") {
    Gate gate("criterion 10", 5.0);
    bool hk = check_hk_xk(64);
    bool signs = true;
    int first_bad = 0;
    for (int k = 2; k <= 64; ++k) {
        if (!xk_below_lambda_k(k)) {
            signs = false;
            if (first_bad == 0) first_bad = k;
        }
    }
    gate.finish(hk && signs,
                std::string("h_k negative at x_k through k=64: ") + (hk ? "yes" : "NO") +
                    "; every x_k certified below lambda_k: " +
                    (signs ? "yes" : ("NO, first failure at k=" + std::to_string(first_bad))));
}
