#include "rational.hpp"

#include "errors.hpp"

#include <cctype>
#include <cstdlib>

namespace ccov {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = (s[0] == '-');
        s.remove_prefix(1);
    }
    if (!all_digits(s)) fail(errc::invalid_argument, "not an integer: '" + std::string(s) + "'");
    Integer v{std::string(s)};
    return neg ? Integer(-v) : v;
}

// mantissa[.fraction] -> exact rational
Rational parse_decimal_body(std::string_view s) {
    auto dot = s.find('.');
    if (dot == std::string_view::npos) return Rational(parse_integer(s));

    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool neg = false;
    if (!whole.empty() && (whole[0] == '+' || whole[0] == '-')) {
        neg = (whole[0] == '-');
        whole.remove_prefix(1);
    }
    if (whole.empty() && frac.empty())
        fail(errc::invalid_argument, "not a number: '" + std::string(s) + "'");
    if (!whole.empty() && !all_digits(whole))
        fail(errc::invalid_argument, "not a number: '" + std::string(s) + "'");
    if (!frac.empty() && !all_digits(frac))
        fail(errc::invalid_argument, "not a number: '" + std::string(s) + "'");

    Integer scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer num = (whole.empty() ? Integer(0) : Integer(std::string(whole))) * scale +
                  (frac.empty() ? Integer(0) : Integer(std::string(frac)));
    Rational r(num, scale);
    return neg ? Rational(-r) : r;
}

} // namespace

Rational parse_rational(std::string_view text) {
    if (text.empty()) fail(errc::invalid_argument, "empty number");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash));
        Integer den = parse_integer(text.substr(slash + 1));
        if (den == 0) fail(errc::invalid_argument, "zero denominator in '" + std::string(text) + "'");
        if (den < 0) { num = -num; den = -den; }
        return Rational(num, den);
    }

    auto epos = text.find_first_of("eE");
    if (epos == std::string_view::npos) return parse_decimal_body(text);

    Rational mantissa = parse_decimal_body(text.substr(0, epos));
    std::string_view exp_part = text.substr(epos + 1);
    Integer exp = parse_integer(exp_part);
    if (exp > 4096 || exp < -4096)
        fail(errc::invalid_argument, "exponent out of range in '" + std::string(text) + "'");
    long e = exp.convert_to<long>();
    Integer pow10 = 1;
    for (long i = 0; i < (e < 0 ? -e : e); ++i) pow10 *= 10;
    return e >= 0 ? Rational(mantissa * pow10) : Rational(mantissa / pow10);
}

std::string fraction_string(const Rational& value) {
    std::string num = numerator(value).str();
    if (denominator(value) == 1) return num;
    return num + "/" + denominator(value).str();
}

std::string decimal_string(const Rational& value, int places) {
    if (places < 0) fail(errc::invalid_argument, "negative decimal places");
    bool neg = value < 0;
    Rational mag = neg ? Rational(-value) : value;
    Integer scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    Integer num = numerator(mag) * scale;
    Integer den = denominator(mag);
    Integer q = num / den;
    Integer rem = num % den;
    if (rem * 2 >= den) ++q; // ties away from zero

    std::string digits = q.str();
    std::string out;
    if (places == 0) {
        out = digits;
    } else {
        if (static_cast<int>(digits.size()) <= places)
            digits.insert(0, places + 1 - digits.size(), '0');
        out = digits.substr(0, digits.size() - places) + "." + digits.substr(digits.size() - places);
    }
    if (neg && q != 0) out.insert(0, 1, '-');
    return out;
}

Rational rational_pow(const Rational& base, unsigned exponent) {
    Rational acc(1);
    Rational b = base;
    unsigned e = exponent;
    while (e) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

int sign_of(const Rational& value) { return value.sign(); }

} // namespace ccov
