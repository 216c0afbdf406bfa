#include "doctest.h"

#include "cantor.hpp"
#include "errors.hpp"

using namespace ccov;

TEST_CASE("address validation") {
    CHECK(valid_address(""));
    CHECK(valid_address("0101"));
    CHECK_FALSE(valid_address("012"));
    CHECK_FALSE(valid_address("abc"));
    CHECK_THROWS_AS(BasicInterval::from_address("2"), Error);
}

TEST_CASE("left endpoint polynomials") {
    CHECK(address_left_poly("") == LambdaPoly{});
    CHECK(address_left_poly("1") == LambdaPoly{1, -1});
    CHECK(address_left_poly("01") == LambdaPoly{0, 1, -1});
    CHECK(address_left_poly("11") == LambdaPoly{1, 0, -1}); // (1-L)(1+L)
    CHECK(address_left_poly("0") == LambdaPoly{});
    CHECK(address_left_poly("1").eval(Rational(1, 3)) == Rational(2, 3));
    CHECK(address_left_poly("11").eval(Rational(1, 3)) == Rational(8, 9));
}

TEST_CASE("interval evaluation at a ratio") {
    Interval iv = interval_of("101", Rational(1, 3));
    CHECK(iv == Interval{Rational(20, 27), Rational(7, 9)});
    CHECK(interval_of("", Rational(1, 3)) == Interval{Rational(0), Rational(1)});
    CHECK(interval_of("0", Rational(9, 20)) == Interval{Rational(0), Rational(9, 20)});
    CHECK(interval_of("1", Rational(9, 20)) == Interval{Rational(11, 20), Rational(1)});
}

TEST_CASE("ratio must lie in (0, 1/2)") {
    for (const char* bad : {"0", "1/2", "3/5", "-1/3"}) {
        try {
            interval_of("1", parse_rational(bad));
            FAIL("expected a range failure at lambda = ", bad);
        } catch (const Error& e) {
            CHECK(e.code() == errc::lambda_out_of_range);
        }
    }
}

TEST_CASE("children split an interval into its end thirds") {
    BasicInterval parent = BasicInterval::from_address("10");
    auto [left, right] = children(parent);
    CHECK(left.address == "100");
    CHECK(right.address == "101");
    CHECK(left.rank == 3);
    CHECK(right.rank == 3);

    Rational lambda(2, 5);
    Interval p = parent.at(lambda);
    Interval l = left.at(lambda);
    Interval r = right.at(lambda);
    CHECK(l.lo == p.lo);
    CHECK(r.hi == p.hi);
    CHECK(l.hi < r.lo); // middle gap removed
    CHECK(l.width() == p.width() * lambda);
    CHECK(r.width() == p.width() * lambda);
    CHECK(r.lo - l.hi == p.width() * (1 - 2 * lambda));
}

TEST_CASE("children left endpoints stay symbolic") {
    BasicInterval parent = BasicInterval::from_address("10");
    auto [left, right] = children(parent);
    CHECK(left.left == address_left_poly("100"));
    CHECK(right.left == address_left_poly("101"));
}

TEST_CASE("enumerate_rank lists all addresses in endpoint order") {
    std::vector<BasicInterval> rank2 = enumerate_rank(2, Rational(9, 20));
    REQUIRE(rank2.size() == 4);
    CHECK(rank2[0].address == "00");
    CHECK(rank2[1].address == "01");
    CHECK(rank2[2].address == "10");
    CHECK(rank2[3].address == "11");
    for (size_t i = 0; i + 1 < rank2.size(); ++i) {
        Interval cur = rank2[i].at(Rational(9, 20));
        Interval nxt = rank2[i + 1].at(Rational(9, 20));
        CHECK(cur.lo < nxt.lo);
        CHECK(cur.hi < nxt.lo); // rank-2 intervals are pairwise disjoint
    }

    std::vector<BasicInterval> rank0 = enumerate_rank(0, Rational(1, 3));
    REQUIRE(rank0.size() == 1);
    CHECK(rank0[0].address.empty());
    CHECK(rank0[0].at(Rational(1, 3)) == Interval{Rational(0), Rational(1)});
}

TEST_CASE("enumerate_rank bounds") {
    CHECK_THROWS_AS(enumerate_rank(-1, Rational(1, 3)), Error);
    CHECK_THROWS_AS(enumerate_rank(63, Rational(1, 3)), Error);
}

TEST_CASE("every rank refines the previous one") {
    Rational lambda(2, 5);
    for (int rank = 1; rank <= 5; ++rank) {
        std::vector<BasicInterval> coarse = enumerate_rank(rank - 1, lambda);
        std::vector<BasicInterval> fine = enumerate_rank(rank, lambda);
        REQUIRE(fine.size() == coarse.size() * 2);
        for (size_t i = 0; i < coarse.size(); ++i) {
            Interval parent = coarse[i].at(lambda);
            Interval l = fine[2 * i].at(lambda);
            Interval r = fine[2 * i + 1].at(lambda);
            CHECK(parent.contains(l));
            CHECK(parent.contains(r));
            CHECK(fine[2 * i].address == coarse[i].address + "0");
            CHECK(fine[2 * i + 1].address == coarse[i].address + "1");
        }
    }
}
