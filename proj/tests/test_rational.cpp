#include "doctest.h"

#include "errors.hpp"
#include "rational.hpp"

using namespace ccov;

namespace {

errc code_of(const char* text) {
    try {
        parse_rational(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected parse_rational to throw for: ", text);
    return errc::invalid_argument;
}

} // namespace

TEST_CASE("parse_rational accepts fractions, integers, decimals, exponents") {
    CHECK(parse_rational("3/7") == Rational(3, 7));
    CHECK(parse_rational("4302/10000") == Rational(2151, 5000));
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("9/-20") == Rational(-9, 20));
    CHECK(parse_rational("2") == 2);
    CHECK(parse_rational("-5") == -5);
    CHECK(parse_rational("+7") == 7);
    CHECK(parse_rational("0.45") == Rational(9, 20));
    CHECK(parse_rational("0.4302") == Rational(2151, 5000));
    CHECK(parse_rational("-1.5") == Rational(-3, 2));
    CHECK(parse_rational("1e-9") == Rational(1, 1000000000));
    CHECK(parse_rational("2.5e3") == 2500);
    CHECK(parse_rational("4.25e-2") == Rational(17, 400));
}

TEST_CASE("parse_rational rejects malformed input") {
    CHECK(code_of("") == errc::invalid_argument);
    CHECK(code_of("abc") == errc::invalid_argument);
    CHECK(code_of("1/0") == errc::invalid_argument);
    CHECK(code_of("1/2/3") == errc::invalid_argument);
    CHECK(code_of("0.4.2") == errc::invalid_argument);
    CHECK(code_of("1e") == errc::invalid_argument);
    CHECK(code_of("1e99999") == errc::invalid_argument);
    CHECK(code_of(".") == errc::invalid_argument);
}

TEST_CASE("fraction_string prints normalized p/q") {
    CHECK(fraction_string(Rational(4, 8)) == "1/2");
    CHECK(fraction_string(Rational(3)) == "3");
    CHECK(fraction_string(Rational(-1, 3)) == "-1/3");
    CHECK(fraction_string(Rational(0)) == "0");
}

TEST_CASE("fraction_string round-trips through parse_rational") {
    for (const Rational& r : {Rational(2151, 5000), Rational(-7, 3), Rational(19),
                              Rational(1, 1000000000)})
        CHECK(parse_rational(fraction_string(r)) == r);
}

TEST_CASE("decimal_string rounds exactly, ties away from zero") {
    CHECK(decimal_string(Rational(1, 3), 6) == "0.333333");
    CHECK(decimal_string(Rational(2, 3), 6) == "0.666667");
    CHECK(decimal_string(Rational(1, 2), 0) == "1");
    CHECK(decimal_string(Rational(-1, 2), 0) == "-1");
    CHECK(decimal_string(Rational(2151, 5000), 4) == "0.4302");
    CHECK(decimal_string(Rational(1), 3) == "1.000");
    CHECK(decimal_string(Rational(-1, 400), 2) == "0.00");
    CHECK(decimal_string(Rational(1, 160), 2) == "0.01");
}

TEST_CASE("rational_pow and sign_of") {
    CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(rational_pow(Rational(9, 20), 0) == 1);
    CHECK(rational_pow(Rational(-1, 2), 2) == Rational(1, 4));
    CHECK(sign_of(Rational(-5, 7)) == -1);
    CHECK(sign_of(Rational(0)) == 0);
    CHECK(sign_of(Rational(1, 9)) == 1);
}
