#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace ccov {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", integers, plain decimals ("0.4302", "-1.5") and decimals with
// an exponent ("1e-9", "2.5e3").  Everything is converted exactly.
Rational parse_rational(std::string_view text);

// "p/q", or just "p" when the denominator is 1.
std::string fraction_string(const Rational& value);

// Fixed-point decimal with the requested number of places, exact rounding
// (ties away from zero).
std::string decimal_string(const Rational& value, int places);

Rational rational_pow(const Rational& base, unsigned exponent);

int sign_of(const Rational& value);

} // namespace ccov
