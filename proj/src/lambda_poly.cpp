#include "lambda_poly.hpp"

#include "errors.hpp"

namespace ccov {

LambdaPoly::LambdaPoly(std::vector<Integer> ascending_coefficients)
    : coeff_(std::move(ascending_coefficients)) {
    normalize();
}

LambdaPoly::LambdaPoly(std::initializer_list<long long> ascending_coefficients) {
    coeff_.reserve(ascending_coefficients.size());
    for (long long c : ascending_coefficients) coeff_.emplace_back(c);
    normalize();
}

LambdaPoly LambdaPoly::constant(Integer value) {
    LambdaPoly p;
    p.coeff_.push_back(std::move(value));
    p.normalize();
    return p;
}

LambdaPoly LambdaPoly::monomial(unsigned degree, Integer coefficient) {
    LambdaPoly p;
    p.coeff_.assign(degree + 1, Integer(0));
    p.coeff_[degree] = std::move(coefficient);
    p.normalize();
    return p;
}

Integer LambdaPoly::coefficient(unsigned degree) const {
    if (degree >= coeff_.size()) return 0;
    return coeff_[degree];
}

void LambdaPoly::normalize() {
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

Rational LambdaPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

int LambdaPoly::sign_at(const Rational& x) const {
    if (coeff_.empty()) return 0;
    const Integer& u = numerator(x);
    const Integer& v = denominator(x); // positive by normalization

    const size_t n = coeff_.size();
    std::vector<Integer> vpow(n);
    vpow[n - 1] = 1;
    for (size_t i = n - 1; i-- > 0;) vpow[i] = vpow[i + 1] * v;

    Integer sum = 0;
    Integer upow = 1;
    for (size_t i = 0; i < n; ++i) {
        if (coeff_[i] != 0) sum += coeff_[i] * upow * vpow[i];
        if (i + 1 < n) upow *= u;
    }
    return sum.sign();
}

LambdaPoly LambdaPoly::operator+(const LambdaPoly& other) const {
    std::vector<Integer> out(std::max(coeff_.size(), other.coeff_.size()), Integer(0));
    for (size_t i = 0; i < coeff_.size(); ++i) out[i] += coeff_[i];
    for (size_t i = 0; i < other.coeff_.size(); ++i) out[i] += other.coeff_[i];
    return LambdaPoly(std::move(out));
}

LambdaPoly LambdaPoly::operator-(const LambdaPoly& other) const {
    std::vector<Integer> out(std::max(coeff_.size(), other.coeff_.size()), Integer(0));
    for (size_t i = 0; i < coeff_.size(); ++i) out[i] += coeff_[i];
    for (size_t i = 0; i < other.coeff_.size(); ++i) out[i] -= other.coeff_[i];
    return LambdaPoly(std::move(out));
}

LambdaPoly LambdaPoly::operator-() const {
    std::vector<Integer> out = coeff_;
    for (auto& c : out) c = -c;
    return LambdaPoly(std::move(out));
}

LambdaPoly LambdaPoly::operator*(const LambdaPoly& other) const {
    if (coeff_.empty() || other.coeff_.empty()) return LambdaPoly();
    std::vector<Integer> out(coeff_.size() + other.coeff_.size() - 1, Integer(0));
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        for (size_t j = 0; j < other.coeff_.size(); ++j)
            out[i + j] += coeff_[i] * other.coeff_[j];
    }
    return LambdaPoly(std::move(out));
}

LambdaPoly LambdaPoly::pow(unsigned exponent) const {
    LambdaPoly acc = constant(1);
    LambdaPoly base = *this;
    while (exponent) {
        if (exponent & 1u) acc = acc * base;
        base = base * base;
        exponent >>= 1u;
    }
    return acc;
}

std::string LambdaPoly::str(const std::string& variable) const {
    if (coeff_.empty()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const Integer& c = coeff_[d];
        if (c == 0) continue;
        Integer mag = c < 0 ? Integer(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        bool show_coeff = (mag != 1) || d == 0;
        if (show_coeff) out += mag.str();
        if (d > 0) {
            if (show_coeff) out += "*";
            out += variable;
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

LambdaPoly one_minus_lambda() { return LambdaPoly{1, -1}; }

} // namespace ccov
