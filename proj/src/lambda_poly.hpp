#pragma once

#include "rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace ccov {

/* Univariate polynomial with arbitrary-precision integer coefficients, used
 * for everything that must be decided without rounding: endpoint formulas in
 * the contraction ratio, threshold conditions rewritten as p >= 0, and the
 * defining polynomials behind root brackets.
 *
 * Coefficients are stored in ascending order and kept normalized (no trailing
 * zero coefficients).  The zero polynomial has an empty coefficient vector and
 * degree -1.
 */
class LambdaPoly {
public:
    LambdaPoly() = default;
    explicit LambdaPoly(std::vector<Integer> ascending_coefficients);
    LambdaPoly(std::initializer_list<long long> ascending_coefficients);

    static LambdaPoly constant(Integer value);
    static LambdaPoly monomial(unsigned degree, Integer coefficient = 1);

    bool is_zero() const { return coeff_.empty(); }
    int degree() const { return static_cast<int>(coeff_.size()) - 1; }
    const std::vector<Integer>& coefficients() const { return coeff_; }
    Integer coefficient(unsigned degree) const;

    // Exact value via Horner's rule.
    Rational eval(const Rational& x) const;

    // Sign of the value at x = u/v without forming the rational result:
    // the denominator is cleared and sum c_i * u^i * v^(d-i) is accumulated
    // over machine integers of arbitrary size.  This is what keeps deep
    // bisection runs cheap.
    int sign_at(const Rational& x) const;

    LambdaPoly operator+(const LambdaPoly& other) const;
    LambdaPoly operator-(const LambdaPoly& other) const;
    LambdaPoly operator-() const;
    LambdaPoly operator*(const LambdaPoly& other) const;
    LambdaPoly pow(unsigned exponent) const;
    bool operator==(const LambdaPoly& other) const = default;

    std::string str(const std::string& variable = "L") const;

private:
    void normalize();

    std::vector<Integer> coeff_;
};

// 1 - L, shared by many endpoint formulas.
LambdaPoly one_minus_lambda();

} // namespace ccov
