#include "coverage.hpp"

#include "cantor.hpp"
#include "errors.hpp"

#include <thread>
#include <utility>

namespace ccov {

namespace {

// Union of the images of pairs (i, j) for i in [begin, end), all j.
IntervalUnion union_of_rows(const std::vector<Rational>& lo_pow,
                            const std::vector<Rational>& hi_pow,
                            const std::vector<Interval>& cells, size_t begin, size_t end) {
    std::vector<Interval> images;
    images.reserve((end - begin) * cells.size());
    for (size_t i = begin; i < end; ++i)
        for (const Interval& c : cells)
            images.push_back(Interval{lo_pow[i] * c.lo, hi_pow[i] * c.hi});
    return union_normalize(std::move(images));
}

} // namespace

IntervalUnion image_union_fk(int k, const Rational& lambda, int rank) {
    if (k < 1) fail(errc::invalid_argument, "k must be >= 1");
    if (rank < 0) fail(errc::invalid_argument, "rank must be >= 0");
    require_lambda_range(lambda);

    std::vector<BasicInterval> basics = enumerate_rank(rank, lambda);
    std::vector<Interval> cells;
    std::vector<Rational> lo_pow, hi_pow;
    cells.reserve(basics.size());
    for (const BasicInterval& b : basics) {
        Interval iv = b.at(lambda);
        lo_pow.push_back(rational_pow(iv.lo, static_cast<unsigned>(k)));
        hi_pow.push_back(rational_pow(iv.hi, static_cast<unsigned>(k)));
        cells.push_back(std::move(iv));
    }

    size_t n = cells.size();
    size_t workers = std::thread::hardware_concurrency();
    if (workers < 2 || n * n < 4096) {
        return union_of_rows(lo_pow, hi_pow, cells, 0, n);
    }
    if (workers > n) workers = n;

    std::vector<IntervalUnion> partial(workers);
    std::vector<std::thread> pool;
    size_t chunk = (n + workers - 1) / workers;
    for (size_t w = 0; w < workers; ++w) {
        size_t begin = w * chunk;
        size_t end = begin + chunk < n ? begin + chunk : n;
        pool.emplace_back([&, w, begin, end] {
            partial[w] = union_of_rows(lo_pow, hi_pow, cells, begin, end);
        });
    }
    for (std::thread& th : pool) th.join();

    std::vector<Interval> all;
    for (IntervalUnion& u : partial)
        for (Interval& iv : u.parts) all.push_back(std::move(iv));
    return union_normalize(std::move(all));
}

GapReport find_gaps(const IntervalUnion& u) {
    if (!u.parts.empty() && (u.parts.front().lo < 0 || u.parts.back().hi > 1))
        fail(errc::invalid_argument, "union must lie inside [0, 1]");
    GapReport report{u, {}};
    for (size_t i = 0; i + 1 < u.parts.size(); ++i)
        report.gaps.push_back(Interval{u.parts[i].hi, u.parts[i + 1].lo});
    return report;
}

const char* const kGapNoteRefutes =
    "every gap shown is a genuine gap of the full construction: the rank-m "
    "intervals contain the whole set, so anything their images miss is missed forever";
const char* const kGapNoteNoCertify =
    "absence of gaps at finite rank does not certify full coverage; only the "
    "certificate checks do";

nlohmann::ordered_json gap_report_json(const GapReport& report, int k,
                                       const Rational& lambda, int rank) {
    nlohmann::ordered_json j;
    j["kind"] = "gap_report";
    j["lambda"] = fraction_string(lambda);
    j["k"] = k;
    j["rank"] = rank;
    j["covered"] = nlohmann::ordered_json::array();
    for (const Interval& iv : report.covered.parts)
        j["covered"].push_back({fraction_string(iv.lo), fraction_string(iv.hi)});
    j["gaps"] = nlohmann::ordered_json::array();
    for (const Interval& g : report.gaps)
        j["gaps"].push_back({fraction_string(g.lo), fraction_string(g.hi)});
    j["notes"] = {kGapNoteRefutes, kGapNoteNoCertify};
    return j;
}

std::string gap_report_text(const GapReport& report, int k, const Rational& lambda,
                            int rank) {
    std::string out = "image union for exponent k = " + std::to_string(k) +
                      ", lambda = " + fraction_string(lambda) +
                      ", rank = " + std::to_string(rank) + "\n";
    out += "covered (" + std::to_string(report.covered.parts.size()) + " parts):\n";
    for (const Interval& iv : report.covered.parts)
        out += "  [" + fraction_string(iv.lo) + ", " + fraction_string(iv.hi) + "]\n";
    if (report.gaps.empty()) {
        out += "gaps: none\n";
    } else {
        out += "gaps (" + std::to_string(report.gaps.size()) + "):\n";
        for (const Interval& g : report.gaps)
            out += "  (" + fraction_string(g.lo) + ", " + fraction_string(g.hi) + ")\n";
    }
    out += "note: " + std::string(kGapNoteRefutes) + "\n";
    out += "note: " + std::string(kGapNoteNoCertify) + "\n";
    return out;
}

std::string gap_report_csv(const GapReport& report) {
    std::string out = "# " + std::string(kGapNoteRefutes) + "\n";
    out += "# " + std::string(kGapNoteNoCertify) + "\n";
    out += "part,lo,hi\n";
    for (const Interval& iv : report.covered.parts)
        out += "covered," + fraction_string(iv.lo) + "," + fraction_string(iv.hi) + "\n";
    for (const Interval& g : report.gaps)
        out += "gap," + fraction_string(g.lo) + "," + fraction_string(g.hi) + "\n";
    return out;
}

} // namespace ccov
