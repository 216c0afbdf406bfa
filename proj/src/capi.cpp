#include "cantorcover.h"

#include "cantor.hpp"
#include "certificates.hpp"
#include "coverage.hpp"
#include "errors.hpp"
#include "images.hpp"
#include "thresholds.hpp"
#include "witness.hpp"

#include <memory>
#include <string>
#include <vector>

struct cvc_report {
    std::string text;
    std::string json;
    std::string csv;
    bool has_csv = false;
    int verdict = 0;
};

namespace {

using namespace ccov;
using nlohmann::ordered_json;

thread_local std::string g_last_error;

cvc_status status_of(errc code) {
    switch (code) {
    case errc::not_certified:
    case errc::no_window: return CVC_NOT_CERTIFIED;
    case errc::expansion_stalled: return CVC_EXPANSION_STALLED;
    default: return CVC_INVALID_ARGUMENT;
    }
}

template <typename Fn>
cvc_status guarded(cvc_report** out, Fn&& fn) {
    if (!out) {
        g_last_error = "output pointer is null";
        return CVC_INVALID_ARGUMENT;
    }
    *out = nullptr;
    try {
        auto report = std::make_unique<cvc_report>();
        fn(*report);
        g_last_error.clear();
        *out = report.release();
        return CVC_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CVC_INTERNAL_ERROR;
    }
}

Rational parse_param(const char* value, const char* name) {
    if (!value) fail(errc::invalid_argument, std::string(name) + " is required");
    return parse_rational(value);
}

std::string pad(std::string s, size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

void render_thresholds(cvc_report& rep, const Rational& width) {
    const auto& catalog = threshold_catalog();

    ordered_json j;
    j["kind"] = "threshold_catalog";
    j["width"] = fraction_string(width);
    j["entries"] = ordered_json::array();

    std::string text = "threshold catalog (isolation width " + fraction_string(width) +
                       ")\n";
    text += pad("id", 19) + pad("root", 17) + pad("quoted", 9) + pad("|delta|", 13) +
            "polynomial\n";
    std::string csv = "id,midpoint,quoted,abs_delta\n";

    for (const ThresholdEntry& e : catalog) {
        RootBracket bracket = isolate_root(e.poly, e.bracket, width);
        Rational mid = bracket.midpoint();
        Rational delta = mid - parse_rational(e.quoted);
        if (delta < 0) delta = -delta;

        std::string mid_dec = decimal_string(mid, 12);
        std::string delta_dec = decimal_string(delta, 10);
        text += pad(e.id, 19) + pad(mid_dec, 17) + pad(e.quoted, 9) +
                pad(delta_dec, 13) + e.poly.str() + "\n";
        if (e.secondary) {
            text += "    non-binding half: " + e.secondary->str();
            if (e.secondary_bracket) {
                RootBracket sb = isolate_root(*e.secondary, *e.secondary_bracket, width);
                text += " (root ~ " + decimal_string(sb.midpoint(), 12) + ")";
            } else {
                text += " (holds on the whole bracket)";
            }
            text += "\n";
        }
        csv += e.id + "," + mid_dec + "," + e.quoted + "," + delta_dec + "\n";

        ordered_json je;
        je["id"] = e.id;
        je["polynomial"] = e.poly.str();
        je["bracket"] = {fraction_string(bracket.lo), fraction_string(bracket.hi)};
        je["midpoint"] = fraction_string(mid);
        je["quoted"] = e.quoted;
        je["abs_delta"] = fraction_string(delta);
        if (e.secondary) {
            je["secondary_polynomial"] = e.secondary->str();
            if (e.secondary_bracket) {
                RootBracket sb = isolate_root(*e.secondary, *e.secondary_bracket, width);
                je["secondary_bracket"] = {fraction_string(sb.lo), fraction_string(sb.hi)};
            }
        }
        j["entries"].push_back(std::move(je));
    }

    rep.text = std::move(text);
    rep.json = j.dump(2) + "\n";
    rep.csv = std::move(csv);
    rep.has_csv = true;
    rep.verdict = 0;
}

void render_lambda_k(cvc_report& rep, int k, const Rational& width) {
    LambdaPoly lp = lambda_k_poly(k);
    LambdaPoly rp = r_k_poly(k);
    RootBracket lb = lambda_k(k, width);
    RootBracket rb = r_k(k, width);
    Rational xk{k - 1, 2 * k - 1};

    std::vector<Comparison> checks;
    auto add = [&checks](std::string label, Rational lhs, const char* rel, Rational rhs) {
        bool ok = relation_holds(lhs, rel, rhs);
        checks.push_back(Comparison{std::move(label), std::move(lhs), std::move(rhs), rel, ok});
    };

    Rational hk = Rational(k - 1) * rational_pow(xk, static_cast<unsigned>(k)) / (k + 1) +
                  2 * xk - 1;
    add("h_k(x_k) negative", hk, "<", Rational(0));
    add("x_k below lambda_k (sign)", Rational(lp.sign_at(xk)), "<", Rational(0));

    // Separate the two brackets so their order is certain.
    int guard = 0;
    RootBracket lsep = lb, rsep = rb;
    while (!(rsep.hi < lsep.lo) && guard++ < 256) {
        rsep = bisect_once(rp, rsep);
        lsep = bisect_once(lp, lsep);
    }
    add("r_k below lambda_k", rsep.hi, "<", lsep.lo);

    bool all = true;
    for (const Comparison& c : checks) all = all && c.holds;

    ordered_json j;
    j["kind"] = "critical_exponent";
    j["k"] = k;
    j["width"] = fraction_string(width);
    j["lambda_k"] = {{"polynomial", lp.str()},
                     {"bracket", {fraction_string(lb.lo), fraction_string(lb.hi)}},
                     {"midpoint", fraction_string(lb.midpoint())}};
    j["r_k"] = {{"polynomial", rp.str()},
                {"bracket", {fraction_string(rb.lo), fraction_string(rb.hi)}},
                {"midpoint", fraction_string(rb.midpoint())}};
    j["x_k"] = fraction_string(xk);
    j["checks"] = ordered_json::array();
    for (const Comparison& c : checks)
        j["checks"].push_back({{"label", c.label},
                               {"lhs", fraction_string(c.lhs)},
                               {"rhs", fraction_string(c.rhs)},
                               {"relation", c.relation},
                               {"holds", c.holds}});

    std::string text = "critical exponent data for k = " + std::to_string(k) +
                       " (isolation width " + fraction_string(width) + ")\n";
    text += "lambda_k root of " + lp.str() + "\n";
    text += "  bracket [" + decimal_string(lb.lo, 12) + ", " + decimal_string(lb.hi, 12) +
            "]\n";
    text += "r_k root of " + rp.str() + "\n";
    text += "  bracket [" + decimal_string(rb.lo, 12) + ", " + decimal_string(rb.hi, 12) +
            "]\n";
    text += "x_k = " + fraction_string(xk) + " ~ " + decimal_string(xk, 6) + "\n";
    for (const Comparison& c : checks) {
        text += c.holds ? "  [pass] " : "  [FAIL] ";
        text += c.label + ": " + fraction_string(c.lhs) + " " + c.relation + " " +
                fraction_string(c.rhs) + "\n";
    }

    rep.text = std::move(text);
    rep.json = j.dump(2) + "\n";
    rep.csv = "k,lambda_k_midpoint,r_k_midpoint,x_k\n" + std::to_string(k) + "," +
              decimal_string(lb.midpoint(), 12) + "," + decimal_string(rb.midpoint(), 12) +
              "," + decimal_string(xk, 12) + "\n";
    rep.has_csv = true;
    rep.verdict = all ? 0 : 1;
}

void render_certificate(cvc_report& rep, const Certificate& cert) {
    rep.text = certificate_text(cert);
    rep.json = certificate_json(cert).dump(2) + "\n";
    rep.has_csv = false;
    rep.verdict = cert.certified ? 0 : 1;
}

void render_gaps(cvc_report& rep, int k, const Rational& lambda, int rank) {
    GapReport report = find_gaps(image_union_fk(k, lambda, rank));
    rep.text = gap_report_text(report, k, lambda, rank);
    rep.json = gap_report_json(report, k, lambda, rank).dump(2) + "\n";
    rep.csv = gap_report_csv(report);
    rep.has_csv = true;
    rep.verdict = 0;
}

void render_witness(cvc_report& rep, const Rational& lambda, const Rational& t, int depth,
                    int scan_limit) {
    WitnessTree tree = build_witness_tree(lambda, t, depth, scan_limit);
    rep.text = witness_tree_text(tree);
    rep.json = witness_tree_json(tree).dump(2) + "\n";
    rep.csv = witness_leaves_csv(tree);
    rep.has_csv = true;
    rep.verdict = verify_tree(tree) ? 0 : 1;
}

void render_enumerate(cvc_report& rep, const Rational& lambda, int rank) {
    std::vector<BasicInterval> basics = enumerate_rank(rank, lambda);

    ordered_json j;
    j["kind"] = "enumeration";
    j["lambda"] = fraction_string(lambda);
    j["rank"] = rank;
    j["count"] = basics.size();
    j["intervals"] = ordered_json::array();

    std::string text = "rank " + std::to_string(rank) + " basic intervals at lambda = " +
                       fraction_string(lambda) + " (" + std::to_string(basics.size()) +
                       " intervals)\n";
    std::string csv = "address,lo,hi\n";
    for (const BasicInterval& b : basics) {
        Interval iv = b.at(lambda);
        std::string addr = b.address.empty() ? "(root)" : b.address;
        text += "  " + pad(addr, rank > 0 ? static_cast<size_t>(rank) + 2 : 8) + "[" +
                fraction_string(iv.lo) + ", " + fraction_string(iv.hi) + "]\n";
        csv += b.address + "," + fraction_string(iv.lo) + "," + fraction_string(iv.hi) +
               "\n";
        j["intervals"].push_back({{"address", b.address},
                                  {"lo", fraction_string(iv.lo)},
                                  {"hi", fraction_string(iv.hi)}});
    }

    rep.text = std::move(text);
    rep.json = j.dump(2) + "\n";
    rep.csv = std::move(csv);
    rep.has_csv = true;
    rep.verdict = 0;
}

void render_lemma(cvc_report& rep, const std::string& lemma, const Rational& lambda,
                  const char* addr_i, const char* addr_j, int k) {
    if (!addr_i || !addr_j) fail(errc::invalid_argument, "both addresses are required");
    std::string ai = addr_i, aj = addr_j;
    if (!valid_address(ai) || !valid_address(aj))
        fail(errc::invalid_argument, "addresses must be strings over {0, 1}");
    if (ai.empty() || aj.empty())
        fail(errc::invalid_argument, "the refinement lemmas need rank >= 1");
    if (ai.size() != aj.size())
        fail(errc::rank_mismatch, "addresses must have the same rank");

    BasicInterval I = BasicInterval::from_address(ai);
    BasicInterval J = BasicInterval::from_address(aj);
    int n = I.rank;
    Rational a = I.left.eval(lambda);
    Rational b = J.left.eval(lambda);
    Rational step = rational_pow(lambda, static_cast<unsigned>(n));
    Rational sub = step * lambda;

    std::vector<Comparison> checks;
    auto add = [&checks](std::string label, Rational lhs, const char* rel, Rational rhs) {
        bool ok = relation_holds(lhs, rel, rhs);
        checks.push_back(Comparison{std::move(label), std::move(lhs), std::move(rhs), rel, ok});
    };

    PairDecomposition dec;
    bool cover = false, dcover = false;
    bool union_equal = false;
    bool has_union_equal = false;
    Interval window{Rational(0), Rational(0)};
    bool has_window = false;

    Rational range_value = lambda * lambda - 3 * lambda + 1;

    if (lemma == "2.2") {
        if (a > b) fail(errc::order_violation, "this lemma needs left(I) <= left(J)");
        add("range: lambda^2 - 3*lambda + 1 <= 0", range_value, "<=", Rational(0));
        add("hypothesis: b <= (a + lambda^(n+1))/(1 - 2*lambda)", b, "<=",
            (a + sub) / (1 - 2 * lambda));
        dec = decompose_f(I, J, lambda);
        cover = covers(dec);
        dcover = double_covers(dec);
        Interval full = image_f(I.at(lambda), J.at(lambda));
        union_equal = union_normalize({dec.parts.begin(), dec.parts.end()}) ==
                      union_normalize({full});
        has_union_equal = true;
        add("conclusion: four parts chain into one interval", Rational(cover ? 1 : 0),
            ">=", Rational(1));
        add("conclusion: parts union equals the product image",
            Rational(union_equal ? 1 : 0), ">=", Rational(1));
    } else if (lemma == "2.3") {
        if (a > b) fail(errc::order_violation, "this lemma needs left(I) <= left(J)");
        add("(2.1) range: lambda^2 - 3*lambda + 1 < 0", range_value, "<", Rational(0));
        add("(2.1) bound: b <= a*lambda/(1 - 2*lambda)", b, "<=",
            a * lambda / (1 - 2 * lambda));
        dec = decompose_f(I, J, lambda);
        cover = covers(dec);
        dcover = double_covers(dec);
        window = double_cover_window(n, a, b, lambda);
        has_window = true;
        add("window nonempty: L_n < R_n", window.lo, "<", window.hi);
        add("conclusion: parts overlap two deep", Rational(dcover ? 1 : 0), ">=",
            Rational(1));
    } else if (lemma == "3.1") {
        if (k < 2) fail(errc::invalid_argument, "this lemma needs k >= 2");
        add("range: lambda at or above the k-th critical value",
            lambda_k_poly(k).eval(lambda), ">=", Rational(0));
        add("(3.1) lower: (1 - 2*lambda)(a + k*lambda^n)/(k*lambda) <= b",
            (1 - 2 * lambda) * (a + k * step) / (k * lambda), "<=", b);
        add("(3.1) upper: b <= a/(k(1 - 2*lambda))", b, "<=",
            a / (k * (1 - 2 * lambda)));
        dec = decompose_fk(k, I, J, lambda);
        cover = covers(dec);
        dcover = double_covers(dec);
        Interval full = image_fk(k, I.at(lambda), J.at(lambda));
        union_equal = union_normalize({dec.parts.begin(), dec.parts.end()}) ==
                      union_normalize({full});
        has_union_equal = true;
        add("conclusion: four parts chain into one interval", Rational(cover ? 1 : 0),
            ">=", Rational(1));
        add("conclusion: parts union equals the power image",
            Rational(union_equal ? 1 : 0), ">=", Rational(1));
    } else {
        fail(errc::unknown_id, "lemma must be one of 2.2, 2.3, 3.1");
    }

    bool all = true;
    for (const Comparison& c : checks) all = all && c.holds;

    ordered_json j;
    j["kind"] = "lemma_check";
    j["lemma"] = lemma;
    j["lambda"] = fraction_string(lambda);
    if (lemma == "3.1") j["k"] = k;
    j["address_i"] = ai;
    j["address_j"] = aj;
    j["rank"] = n;
    j["checks"] = ordered_json::array();
    for (const Comparison& c : checks)
        j["checks"].push_back({{"label", c.label},
                               {"lhs", fraction_string(c.lhs)},
                               {"rhs", fraction_string(c.rhs)},
                               {"relation", c.relation},
                               {"holds", c.holds}});
    j["decomposition"] = ordered_json::array();
    for (const Interval& part : dec.parts)
        j["decomposition"].push_back({fraction_string(part.lo), fraction_string(part.hi)});
    j["cover"] = cover;
    j["double_cover"] = dcover;
    if (has_union_equal) j["union_equals_image"] = union_equal;
    if (has_window)
        j["window"] = {fraction_string(window.lo), fraction_string(window.hi)};
    j["all_hold"] = all;

    std::string text = "lemma check " + lemma + "\n";
    text += "lambda = " + fraction_string(lambda) + ", pair (" + ai + ", " + aj +
            "), rank " + std::to_string(n) + "\n";
    if (lemma == "3.1") text += "k = " + std::to_string(k) + "\n";
    for (const Comparison& c : checks) {
        text += c.holds ? "  [pass] " : "  [FAIL] ";
        text += c.label + ": " + fraction_string(c.lhs) + " " + c.relation + " " +
                fraction_string(c.rhs) + "\n";
    }
    text += "decomposition:\n";
    for (const Interval& part : dec.parts)
        text += "  [" + fraction_string(part.lo) + ", " + fraction_string(part.hi) + "]\n";
    text += std::string("cover: ") + (cover ? "yes" : "no") + "\n";
    text += std::string("double cover: ") + (dcover ? "yes" : "no") + "\n";
    if (has_union_equal)
        text += std::string("union equals image: ") + (union_equal ? "yes" : "no") + "\n";
    if (has_window)
        text += "window: (" + fraction_string(window.lo) + ", " +
                fraction_string(window.hi) + ")\n";
    text += all ? "ALL CHECKS HOLD\n" : "SOME CHECKS FAIL\n";

    rep.text = std::move(text);
    rep.json = j.dump(2) + "\n";
    rep.has_csv = false;
    rep.verdict = all ? 0 : 1;
}

Rational width_or_default(const char* width) {
    if (!width) return Rational{1, 1000000000};
    return parse_rational(width);
}

} // namespace

extern "C" {

const char* cvc_last_error(void) { return g_last_error.c_str(); }

cvc_status cvc_thresholds(const char* width, cvc_report** out) {
    return guarded(out, [&](cvc_report& rep) { render_thresholds(rep, width_or_default(width)); });
}

cvc_status cvc_lambda_k(int k, const char* width, cvc_report** out) {
    return guarded(out,
                   [&](cvc_report& rep) { render_lambda_k(rep, k, width_or_default(width)); });
}

cvc_status cvc_certify(const char* kind, const char* lambda, int k, cvc_report** out) {
    return guarded(out, [&](cvc_report& rep) {
        if (!kind) fail(errc::invalid_argument, "certificate kind is required");
        std::string which = kind;
        Rational l = parse_param(lambda, "lambda");
        if (which == "st") {
            render_certificate(rep, certify_st_continuum(l));
        } else if (which == "fk") {
            render_certificate(rep, certify_fk_coverage(k, l));
        } else if (which == "circle") {
            render_certificate(rep, certify_circle_continuum(l));
        } else {
            fail(errc::unknown_id, "certificate kind must be st, fk, or circle");
        }
    });
}

cvc_status cvc_gaps(const char* lambda, int k, int rank, cvc_report** out) {
    return guarded(out, [&](cvc_report& rep) {
        render_gaps(rep, k, parse_param(lambda, "lambda"), rank);
    });
}

cvc_status cvc_witness(const char* lambda, const char* t, int depth, int scan_limit,
                       cvc_report** out) {
    return guarded(out, [&](cvc_report& rep) {
        render_witness(rep, parse_param(lambda, "lambda"), parse_param(t, "t"), depth,
                       scan_limit <= 0 ? 24 : scan_limit);
    });
}

cvc_status cvc_enumerate(const char* lambda, int rank, cvc_report** out) {
    return guarded(out, [&](cvc_report& rep) {
        render_enumerate(rep, parse_param(lambda, "lambda"), rank);
    });
}

cvc_status cvc_check_lemma(const char* lemma, const char* lambda, const char* addr_i,
                           const char* addr_j, int k, cvc_report** out) {
    return guarded(out, [&](cvc_report& rep) {
        if (!lemma) fail(errc::invalid_argument, "lemma selector is required");
        render_lemma(rep, lemma, parse_param(lambda, "lambda"), addr_i, addr_j, k);
    });
}

const char* cvc_report_text(const cvc_report* report) {
    return report ? report->text.c_str() : nullptr;
}

const char* cvc_report_json(const cvc_report* report) {
    return report ? report->json.c_str() : nullptr;
}

const char* cvc_report_csv(const cvc_report* report) {
    return report && report->has_csv ? report->csv.c_str() : nullptr;
}

int cvc_report_verdict(const cvc_report* report) {
    return report ? report->verdict : 1;
}

void cvc_report_free(cvc_report* report) { delete report; }

} // extern "C"
