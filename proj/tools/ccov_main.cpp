#include "cantorcover.h"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>

namespace {

struct ReportDeleter {
    void operator()(cvc_report* r) const { cvc_report_free(r); }
};
using ReportPtr = std::unique_ptr<cvc_report, ReportDeleter>;

int status_exit(cvc_status status) {
    switch (status) {
    case CVC_OK: return 0;
    case CVC_INVALID_ARGUMENT: return 1;
    case CVC_NOT_CERTIFIED: return 2;
    case CVC_EXPANSION_STALLED: return 3;
    default: return 4;
    }
}

int print_report(const cvc_report* report, const std::string& format) {
    const char* body = nullptr;
    if (format == "json") {
        body = cvc_report_json(report);
    } else if (format == "csv") {
        body = cvc_report_csv(report);
        if (!body) {
            std::cerr << "error: this report has no tabular form; use text or json\n";
            return 1;
        }
    } else {
        body = cvc_report_text(report);
    }
    std::cout << body;
    return 0;
}

int default_rank_limit() {
    const char* env = std::getenv("CANTORCOVER_RANK_LIMIT");
    if (!env) return 10;
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 0 || value > 62) return 10;
    return static_cast<int>(value);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of coverings by Cantor-set products"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    int rank_limit = default_rank_limit();
    app.add_option("--rank-limit", rank_limit,
                   "largest rank accepted by gaps/enumerate")
        ->capture_default_str();

    auto* cmd_thresholds =
        app.add_subcommand("thresholds", "print the polynomial threshold catalog");
    cmd_thresholds->fallthrough();
    std::string thresholds_width;
    cmd_thresholds->add_option("--width", thresholds_width,
                               "root isolation width (fraction)");

    auto* cmd_lambda_k =
        app.add_subcommand("lambda-k", "critical-value data for one exponent");
    cmd_lambda_k->fallthrough();
    int lk_k = 0;
    cmd_lambda_k->add_option("--k", lk_k, "exponent")->required();
    std::string lk_width;
    cmd_lambda_k->add_option("--width", lk_width, "root isolation width (fraction)");

    auto* cmd_certify =
        app.add_subcommand("certify", "evaluate a coverage certificate at one lambda");
    cmd_certify->fallthrough();
    std::string certify_kind;
    cmd_certify->add_option("kind", certify_kind, "st, fk, or circle")->required();
    std::string certify_lambda;
    cmd_certify->add_option("--lambda", certify_lambda, "contraction ratio")->required();
    int certify_k = 0;
    cmd_certify->add_option("--k", certify_k, "exponent (fk only)");

    auto* cmd_gaps = app.add_subcommand(
        "gaps", "finite-rank covered parts and gaps of the power image");
    cmd_gaps->fallthrough();
    std::string gaps_lambda;
    cmd_gaps->add_option("--lambda", gaps_lambda, "contraction ratio")->required();
    int gaps_k = 0;
    cmd_gaps->add_option("--k", gaps_k, "exponent")->required();
    int gaps_rank = 0;
    cmd_gaps->add_option("--rank", gaps_rank, "refinement rank")->required();

    auto* cmd_witness = app.add_subcommand(
        "witness", "build and verify a binary witness tree for one target value");
    cmd_witness->fallthrough();
    std::string witness_lambda;
    cmd_witness->add_option("--lambda", witness_lambda, "contraction ratio")->required();
    std::string witness_t;
    cmd_witness->add_option("--t", witness_t, "target value in (0, 1)")->required();
    int witness_depth = 0;
    cmd_witness->add_option("--depth", witness_depth, "tree depth")->required();
    int witness_scan = 0;
    cmd_witness->add_option("--scan-limit", witness_scan,
                            "extra refinement levels before giving up");
    bool leaves_only = false;
    cmd_witness->add_flag("--leaves-only", leaves_only,
                          "emit only the leaf pairs as CSV");

    auto* cmd_enumerate =
        app.add_subcommand("enumerate", "list the rank-n basic intervals");
    cmd_enumerate->fallthrough();
    std::string enum_lambda;
    cmd_enumerate->add_option("--lambda", enum_lambda, "contraction ratio")->required();
    int enum_rank = 0;
    cmd_enumerate->add_option("--rank", enum_rank, "rank")->required();

    auto* cmd_lemma = app.add_subcommand(
        "check-lemma", "decompose one pair of basic intervals and test a refinement lemma");
    cmd_lemma->fallthrough();
    std::string lemma_id;
    cmd_lemma->add_option("lemma", lemma_id, "2.2, 2.3, or 3.1")->required();
    std::string lemma_lambda;
    cmd_lemma->add_option("--lambda", lemma_lambda, "contraction ratio")->required();
    std::string lemma_i;
    cmd_lemma->add_option("--i", lemma_i, "first address")->required();
    std::string lemma_j;
    cmd_lemma->add_option("--j", lemma_j, "second address")->required();
    int lemma_k = 0;
    cmd_lemma->add_option("--k", lemma_k, "exponent (lemma 3.1 only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    cvc_report* raw = nullptr;
    cvc_status status = CVC_INTERNAL_ERROR;
    bool pass_fail = false;
    bool witness_mode = false;

    if (cmd_thresholds->parsed()) {
        status = cvc_thresholds(
            thresholds_width.empty() ? nullptr : thresholds_width.c_str(), &raw);
    } else if (cmd_lambda_k->parsed()) {
        status = cvc_lambda_k(lk_k, lk_width.empty() ? nullptr : lk_width.c_str(), &raw);
    } else if (cmd_certify->parsed()) {
        pass_fail = true;
        status = cvc_certify(certify_kind.c_str(), certify_lambda.c_str(), certify_k, &raw);
    } else if (cmd_gaps->parsed()) {
        if (gaps_rank > rank_limit) {
            std::cerr << "error: rank " << gaps_rank << " exceeds the rank limit "
                      << rank_limit
                      << " (raise it with --rank-limit or CANTORCOVER_RANK_LIMIT)\n";
            return 1;
        }
        status = cvc_gaps(gaps_lambda.c_str(), gaps_k, gaps_rank, &raw);
    } else if (cmd_witness->parsed()) {
        witness_mode = true;
        if (leaves_only) format = "csv";
        status = cvc_witness(witness_lambda.c_str(), witness_t.c_str(), witness_depth,
                             witness_scan, &raw);
    } else if (cmd_enumerate->parsed()) {
        if (enum_rank > rank_limit) {
            std::cerr << "error: rank " << enum_rank << " exceeds the rank limit "
                      << rank_limit
                      << " (raise it with --rank-limit or CANTORCOVER_RANK_LIMIT)\n";
            return 1;
        }
        status = cvc_enumerate(enum_lambda.c_str(), enum_rank, &raw);
    } else if (cmd_lemma->parsed()) {
        pass_fail = true;
        status = cvc_check_lemma(lemma_id.c_str(), lemma_lambda.c_str(), lemma_i.c_str(),
                                 lemma_j.c_str(), lemma_k, &raw);
    }

    ReportPtr report(raw);
    if (status != CVC_OK) {
        std::cerr << "error: " << cvc_last_error() << "\n";
        return status_exit(status);
    }

    int print_status = print_report(report.get(), format);
    if (print_status != 0) return print_status;

    int verdict = cvc_report_verdict(report.get());
    if (pass_fail && verdict != 0) return 2;
    if (witness_mode && verdict != 0) {
        std::cerr << "error: witness tree failed verification\n";
        return 4;
    }
    return 0;
}
