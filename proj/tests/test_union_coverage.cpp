#include "doctest.h"

#include "cantor.hpp"
#include "coverage.hpp"
#include "errors.hpp"
#include "images.hpp"
#include "interval_union.hpp"

#include <algorithm>
#include <random>

using namespace ccov;

namespace {

Interval iv(long long nlo, long long dlo, long long nhi, long long dhi) {
    return Interval{Rational(nlo, dlo), Rational(nhi, dhi)};
}

} // namespace

TEST_CASE("union_normalize sorts, merges overlaps, merges touching parts") {
    IntervalUnion u = union_normalize({iv(1, 2, 3, 4), iv(0, 1, 1, 4), iv(1, 4, 1, 2)});
    REQUIRE(u.parts.size() == 1);
    CHECK(u.parts[0] == iv(0, 1, 3, 4));

    IntervalUnion v = union_normalize({iv(2, 3, 1, 1), iv(0, 1, 1, 3)});
    REQUIRE(v.parts.size() == 2);
    CHECK(v.parts[0] == iv(0, 1, 1, 3));
    CHECK(v.parts[1] == iv(2, 3, 1, 1));

    CHECK(union_normalize({}).parts.empty());

    // Degenerate points are kept (and merged when adjacent).
    IntervalUnion w = union_normalize({iv(1, 2, 1, 2), iv(1, 2, 2, 3)});
    REQUIRE(w.parts.size() == 1);
    CHECK(w.parts[0] == iv(1, 2, 2, 3));
}

TEST_CASE("union_normalize rejects reversed intervals") {
    try {
        union_normalize({iv(1, 1, 1, 2)});
        FAIL("expected empty_interval");
    } catch (const Error& e) {
        CHECK(e.code() == errc::empty_interval);
    }
}

TEST_CASE("union_normalize is idempotent and order-independent") {
    std::vector<Interval> parts = {iv(0, 1, 1, 8),  iv(1, 4, 1, 2), iv(3, 8, 5, 8),
                                   iv(7, 8, 1, 1),  iv(1, 16, 1, 8), iv(5, 8, 3, 4)};
    IntervalUnion base = union_normalize(parts);
    CHECK(union_normalize(base.parts) == base);

    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(parts.begin(), parts.end(), rng);
        CHECK(union_normalize(parts) == base);
    }
}

TEST_CASE("containment queries") {
    IntervalUnion u = union_normalize({iv(0, 1, 1, 4), iv(1, 2, 3, 4)});
    CHECK(u.contains(Rational(1, 8)));
    CHECK(u.contains(Rational(1, 4)));
    CHECK_FALSE(u.contains(Rational(3, 8)));
    CHECK(u.contains(iv(9, 16, 11, 16)));
    CHECK_FALSE(u.contains(iv(1, 8, 3, 8)));
    CHECK_FALSE(u.contains(iv(1, 4, 1, 2)));
}

TEST_CASE("rank-2 fourth-power union at lambda = 1/3 has exactly two holes") {
    IntervalUnion u = image_union_fk(4, Rational(1, 3), 2);
    REQUIRE(u.parts.size() == 3);
    CHECK(u.parts[0] == iv(0, 1, 2401, 19683));
    CHECK(u.parts[1] == iv(32, 243, 2401, 6561));
    CHECK(u.parts[2] == iv(8192, 19683, 1, 1));

    GapReport report = find_gaps(u);
    REQUIRE(report.gaps.size() == 2);
    CHECK(report.gaps[0] == iv(2401, 19683, 32, 243));
    CHECK(report.gaps[1] == iv(2401, 6561, 8192, 19683));
}

TEST_CASE("rank-2 cube union at lambda = 1/3 fills the unit interval") {
    IntervalUnion u = image_union_fk(3, Rational(1, 3), 2);
    REQUIRE(u.parts.size() == 1);
    CHECK(u.parts[0] == iv(0, 1, 1, 1));
    CHECK(find_gaps(u).gaps.empty());
}

TEST_CASE("rank-1 product union at lambda = 1/3") {
    IntervalUnion u = image_union_fk(1, Rational(1, 3), 1);
    REQUIRE(u.parts.size() == 2);
    CHECK(u.parts[0] == iv(0, 1, 1, 3));
    CHECK(u.parts[1] == iv(4, 9, 1, 1));
}

TEST_CASE("image_union_fk validates its arguments") {
    CHECK_THROWS_AS(image_union_fk(0, Rational(1, 3), 2), Error);
    CHECK_THROWS_AS(image_union_fk(2, Rational(1, 2), 2), Error);
    CHECK_THROWS_AS(image_union_fk(2, Rational(1, 3), -1), Error);
}

TEST_CASE("unions shrink monotonically as the rank grows") {
    Rational lambda(2, 5);
    IntervalUnion prev = image_union_fk(2, lambda, 0);
    for (int rank = 1; rank <= 5; ++rank) {
        IntervalUnion cur = image_union_fk(2, lambda, rank);
        for (const Interval& part : cur.parts) CHECK(prev.contains(part));
        CHECK(cur.parts.front().lo == 0);
        CHECK(cur.parts.back().hi == 1);
        prev = cur;
    }
}

TEST_CASE("threaded evaluation matches a sequential rebuild") {
    Rational lambda(9, 20);
    int rank = 6; // 64 intervals, 4096 pairs: crosses the threading threshold
    IntervalUnion threaded = image_union_fk(2, lambda, rank);
    CHECK(image_union_fk(2, lambda, rank) == threaded); // deterministic

    std::vector<Interval> parts;
    std::vector<BasicInterval> cells = enumerate_rank(rank, lambda);
    for (const BasicInterval& x : cells)
        for (const BasicInterval& y : cells)
            parts.push_back(image_fk(2, x.at(lambda), y.at(lambda)));
    CHECK(union_normalize(std::move(parts)) == threaded);
}

TEST_CASE("find_gaps rejects unions that leave [0, 1]") {
    CHECK_THROWS_AS(find_gaps(union_normalize({iv(-1, 2, 1, 2)})), Error);
    CHECK_THROWS_AS(find_gaps(union_normalize({iv(1, 2, 3, 2)})), Error);
    CHECK(find_gaps(union_normalize({})).gaps.empty());
}

TEST_CASE("gap reports carry both one-sided notes in every format") {
    GapReport report = find_gaps(image_union_fk(4, Rational(1, 3), 2));
    auto j = gap_report_json(report, 4, Rational(1, 3), 2);
    CHECK(j["kind"] == "gap_report");
    CHECK(j["lambda"] == "1/3");
    CHECK(j["k"] == 4);
    CHECK(j["rank"] == 2);
    REQUIRE(j["notes"].size() == 2);
    CHECK(j["covered"].size() == 3);
    CHECK(j["gaps"].size() == 2);

    std::string text = gap_report_text(report, 4, Rational(1, 3), 2);
    CHECK(text.find(kGapNoteRefutes) != std::string::npos);
    CHECK(text.find(kGapNoteNoCertify) != std::string::npos);
    CHECK(text.find("2401/19683") != std::string::npos);

    std::string csv = gap_report_csv(report);
    CHECK(csv.find("part,lo,hi") != std::string::npos);
    CHECK(csv.find("covered,0,2401/19683") != std::string::npos);
    CHECK(csv.find("gap,2401/19683,32/243") != std::string::npos);
}

TEST_CASE("json round-trip of a gap report is byte-identical") {
    GapReport report = find_gaps(image_union_fk(4, Rational(1, 3), 2));
    auto j = gap_report_json(report, 4, Rational(1, 3), 2);
    std::string once = j.dump(2);
    CHECK(nlohmann::ordered_json::parse(once).dump(2) == once);
}
