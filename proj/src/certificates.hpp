#pragma once

#include "images.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ccov {

enum class CertKind { st_continuum, fk_coverage, circle_continuum };

std::string cert_kind_name(CertKind kind);

// Record of the exact inequality checks behind one covering statement.  Every
// check is evaluated (no short-circuit) so a refusal names all culprits.
struct Certificate {
    CertKind kind;
    Rational lambda;
    std::optional<int> k;
    std::vector<Comparison> checks;
    bool certified = false;
    std::string conclusion;    // nonempty exactly when certified
    std::string first_failing; // label of the first failing check
    std::vector<std::string> failing_labels;
};

// Product images of the six catalog pairs cover a fixed top window and the
// window reaches its own scaled copy, so every product value in (0,1) is hit
// by a continuum of Cantor pairs.
Certificate certify_st_continuum(const Rational& lambda);
// One-pair version for x^k*y: the seed pair refines into itself above the
// critical lambda, and the images of the scaled copies cover [0,1].
Certificate certify_fk_coverage(int k, const Rational& lambda);
// Squared-sum analogue over the four rank-2 pairs.
Certificate certify_circle_continuum(const Rational& lambda);

nlohmann::ordered_json certificate_json(const Certificate& cert);
std::string certificate_text(const Certificate& cert);

} // namespace ccov
