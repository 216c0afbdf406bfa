#include "cantor.hpp"

#include "errors.hpp"

namespace ccov {

void require_lambda_range(const Rational& lambda) {
    if (!(lambda > 0 && lambda < Rational(1, 2)))
        fail(errc::lambda_out_of_range,
             "contraction ratio must lie in (0, 1/2), got " + fraction_string(lambda));
}

bool valid_address(std::string_view digits) {
    for (char c : digits)
        if (c != '0' && c != '1') return false;
    return true;
}

LambdaPoly address_left_poly(std::string_view digits) {
    std::vector<Integer> coeff(digits.size() + 1, Integer(0));
    for (size_t j = 0; j < digits.size(); ++j) {
        if (digits[j] == '1') {
            coeff[j] += 1;     // L^(j)
            coeff[j + 1] -= 1; // ... * (1 - L) contributes -L^(j+1)
        }
    }
    return LambdaPoly(std::move(coeff));
}

BasicInterval BasicInterval::from_address(std::string_view digits) {
    if (!valid_address(digits))
        fail(errc::invalid_argument, "address must be a string of 0/1 digits: '" +
                                         std::string(digits) + "'");
    BasicInterval out;
    out.address = std::string(digits);
    out.left = address_left_poly(digits);
    out.rank = static_cast<int>(digits.size());
    return out;
}

Interval BasicInterval::at(const Rational& lambda) const {
    require_lambda_range(lambda);
    Rational a = left.eval(lambda);
    return Interval{a, a + rational_pow(lambda, static_cast<unsigned>(rank))};
}

std::pair<BasicInterval, BasicInterval> children(const BasicInterval& interval) {
    BasicInterval lo = interval;
    lo.address += '0';
    lo.rank += 1;

    BasicInterval hi = interval;
    hi.address += '1';
    // right child starts at a + L^n - L^(n+1)
    hi.left = hi.left + LambdaPoly::monomial(static_cast<unsigned>(interval.rank)) -
              LambdaPoly::monomial(static_cast<unsigned>(interval.rank) + 1);
    hi.rank += 1;
    return {std::move(lo), std::move(hi)};
}

Interval interval_of(std::string_view digits, const Rational& lambda) {
    return BasicInterval::from_address(digits).at(lambda);
}

std::vector<BasicInterval> enumerate_rank(int rank, const Rational& lambda) {
    require_lambda_range(lambda);
    if (rank < 0 || rank > 62) fail(errc::invalid_argument, "rank out of range");
    std::vector<BasicInterval> out;
    out.reserve(size_t(1) << rank);
    std::string address(static_cast<size_t>(rank), '0');
    for (unsigned long long bits = 0; bits < (1ull << rank); ++bits) {
        for (int j = 0; j < rank; ++j)
            address[static_cast<size_t>(j)] = (bits >> (rank - 1 - j)) & 1ull ? '1' : '0';
        out.push_back(BasicInterval::from_address(address));
    }
    return out;
}

} // namespace ccov
