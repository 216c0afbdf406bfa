#include "certificates.hpp"

#include "errors.hpp"
#include "thresholds.hpp"

namespace ccov {

namespace {

void add_check(Certificate& cert, std::string label, Rational lhs, std::string relation,
               Rational rhs) {
    bool ok = relation_holds(lhs, relation, rhs);
    cert.checks.push_back(Comparison{std::move(label), std::move(lhs), std::move(rhs),
                                     std::move(relation), ok});
}

void add_window_checks(Certificate& cert, const std::string& prefix, const char* eq_label,
                       const AddressPair& pair, const Rational& lambda) {
    BasicInterval I = BasicInterval::from_address(pair.i);
    BasicInterval J = BasicInterval::from_address(pair.j);
    std::vector<Comparison> detail;
    window_condition(I, J, lambda, &detail);
    for (Comparison& d : detail)
        cert.checks.push_back(Comparison{prefix + " " + eq_label + " " + d.label, d.lhs,
                                         d.rhs, d.relation, d.holds});
}

void finalize(Certificate& cert, std::string conclusion) {
    cert.certified = true;
    for (const Comparison& c : cert.checks) {
        if (!c.holds) {
            cert.certified = false;
            if (cert.first_failing.empty()) cert.first_failing = c.label;
            cert.failing_labels.push_back(c.label);
        }
    }
    if (cert.certified) cert.conclusion = std::move(conclusion);
}

} // namespace

std::string cert_kind_name(CertKind kind) {
    switch (kind) {
    case CertKind::st_continuum: return "st_continuum";
    case CertKind::fk_coverage: return "fk_coverage";
    case CertKind::circle_continuum: return "circle_continuum";
    }
    fail(errc::invalid_argument, "bad certificate kind");
}

Certificate certify_st_continuum(const Rational& lambda) {
    require_lambda_range(lambda);
    Certificate cert{CertKind::st_continuum, lambda, std::nullopt, {}, false, "", "", {}};

    add_check(cert, "(2.1) range", lambda * lambda - 3 * lambda + 1, "<", Rational(0));

    const auto& pairs = st_catalog_pairs();
    for (size_t p = 0; p < pairs.size(); ++p) {
        std::string prefix = p < 2 ? "Step II pair " + std::to_string(p + 1)
                                   : "Table 1 row " + std::to_string(p - 1);
        add_window_checks(cert, prefix, "(2.2)", pairs[p], lambda);
    }

    // Consecutive pair images overlap strictly, so their union is one window.
    Rational cube = rational_pow(lambda, 3);
    std::vector<Rational> lo, hi;
    for (const AddressPair& pr : pairs) {
        Rational a = address_left_poly(pr.i).eval(lambda);
        Rational b = address_left_poly(pr.j).eval(lambda);
        lo.push_back(a * b);
        hi.push_back((a + cube) * (b + cube));
    }
    for (int i = 0; i < 5; ++i)
        add_check(cert, "Step II chain " + std::to_string(i + 1), hi[static_cast<size_t>(i) + 1],
                  ">", lo[static_cast<size_t>(i)]);

    // The window (w, 1) must overlap its own copy scaled by lambda.
    Rational w = (1 - lambda) * (1 - lambda + lambda * lambda - rational_pow(lambda, 3));
    add_check(cert, "scaling overlap", lambda, ">", w);

    finalize(cert, "S_t has the cardinality of the continuum for every t in (0, 1): the six "
                   "pair images cover (" +
                       fraction_string(w) +
                       ", 1) and multiplying solutions by lambda reaches every smaller t");
    return cert;
}

Certificate certify_fk_coverage(int k, const Rational& lambda) {
    require_lambda_range(lambda);
    if (k < 2) fail(errc::invalid_argument, "k must be >= 2");
    Certificate cert{CertKind::fk_coverage, lambda, k, {}, false, "", "", {}};

    add_check(cert, "lambda_k sign", lambda_k_poly(k).eval(lambda), ">=", Rational(0));
    add_check(cert, "Lemma 3.3 bound 1",
              (1 - 2 * lambda) * (1 + (k - 1) * lambda) / (k * lambda), "<=", 1 - lambda);
    add_check(cert, "Lemma 3.3 bound 2", Rational(1),
              "<=", (1 - lambda) / (k * (1 - 2 * lambda)));
    add_check(cert, "scaling reach", rational_pow(1 - lambda, static_cast<unsigned>(k) + 1),
              "<", lambda);

    finalize(cert, "f_k(C_lambda, C_lambda) = [0, 1] for k = " + std::to_string(k));
    return cert;
}

Certificate certify_circle_continuum(const Rational& lambda) {
    require_lambda_range(lambda);
    Certificate cert{CertKind::circle_continuum, lambda, std::nullopt, {}, false, "", "", {}};

    const auto& pairs = circle_catalog_pairs();
    for (size_t p = 0; p < pairs.size(); ++p)
        add_window_checks(cert, "circle pair " + std::to_string(p + 1), "(4.1)", pairs[p],
                          lambda);

    Rational sq = lambda * lambda;
    std::vector<Rational> slo, shi;
    for (const AddressPair& pr : pairs) {
        Rational a = address_left_poly(pr.i).eval(lambda);
        Rational b = address_left_poly(pr.j).eval(lambda);
        slo.push_back(a * a + b * b);
        Rational ah = a + sq, bh = b + sq;
        shi.push_back(ah * ah + bh * bh);
    }
    for (int i = 0; i < 3; ++i)
        add_check(cert, "circle overlap " + std::to_string(i + 1),
                  shi[static_cast<size_t>(i) + 1], ">", slo[static_cast<size_t>(i)]);
    add_check(cert, "circle scaling bound", slo[3], "<", 2 * sq);

    finalize(cert, "the circle x^2 + y^2 = r meets C_lambda x C_lambda in a set of "
                   "cardinality continuum for every r in (0, 2)");
    return cert;
}

nlohmann::ordered_json certificate_json(const Certificate& cert) {
    nlohmann::ordered_json j;
    j["kind"] = cert_kind_name(cert.kind);
    j["lambda"] = fraction_string(cert.lambda);
    if (cert.k) j["k"] = *cert.k;
    j["checks"] = nlohmann::ordered_json::array();
    for (const Comparison& c : cert.checks) {
        nlohmann::ordered_json jc;
        jc["label"] = c.label;
        jc["lhs"] = fraction_string(c.lhs);
        jc["rhs"] = fraction_string(c.rhs);
        jc["relation"] = c.relation;
        jc["holds"] = c.holds;
        j["checks"].push_back(std::move(jc));
    }
    j["certified"] = cert.certified;
    if (cert.certified) {
        j["conclusion"] = cert.conclusion;
    } else {
        j["first_failing"] = cert.first_failing;
        j["failing"] = cert.failing_labels;
    }
    return j;
}

std::string certificate_text(const Certificate& cert) {
    std::string out = "certificate " + cert_kind_name(cert.kind) + "\n";
    out += "lambda = " + fraction_string(cert.lambda) + "\n";
    if (cert.k) out += "k = " + std::to_string(*cert.k) + "\n";
    for (const Comparison& c : cert.checks) {
        out += c.holds ? "  [pass] " : "  [FAIL] ";
        out += c.label + ": " + fraction_string(c.lhs) + " " + c.relation + " " +
               fraction_string(c.rhs) + "\n";
    }
    if (cert.certified) {
        out += "CERTIFIED\n";
        out += "conclusion: " + cert.conclusion + "\n";
    } else {
        out += "NOT CERTIFIED\n";
        out += "first failing check: " + cert.first_failing + "\n";
        out += "failing checks:";
        for (const std::string& label : cert.failing_labels) out += " [" + label + "]";
        out += "\n";
    }
    return out;
}

} // namespace ccov
