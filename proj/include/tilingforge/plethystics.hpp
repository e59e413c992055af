#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tilingforge/quiver.hpp"

namespace tilingforge {

inline constexpr std::size_t kDefaultSeriesOrder = 30;

// a_0 + a_1 t + ... + a_N t^N, exact.
class TruncatedSeries {
public:
    TruncatedSeries() : coeffs_(1, Rational(0)) {}
    // Missing coefficients are zero; extra ones are dropped.
    TruncatedSeries(std::vector<Rational> coeffs, std::size_t order);

    static TruncatedSeries constant(const Rational& c, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](std::size_t k) const { return coeffs_[k]; }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;

    // Highest k with a_k != 0, or -1 for the zero series.
    long degree() const;

    // "1 + 4t + 9t^2", fractions parenthesised: "(1/2)t^3". Zero is "0".
    std::string to_string() const;
    // Comma-separated coefficients a_0..a_N.
    std::string to_list() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

// Parses "1,0,-1" or "1, 1/2, -3" into ascending coefficients. Throws ParseError.
std::vector<Rational> parse_coefficients(const std::string& text);

// numer / denom expanded to order N. Throws DivisionByZeroConstantError.
TruncatedSeries series_from_rational(const std::vector<Rational>& numer, const std::vector<Rational>& denom,
                                     std::size_t order = kDefaultSeriesOrder);

int mobius(std::size_t k);

// exp(sum_n (f(t^n) - f(0)) / n), via the exponential recurrence.
TruncatedSeries pe(const TruncatedSeries& f);

// prod_n (1 - t^n)^(-a_n) via generalized binomial expansions.
TruncatedSeries pe_euler_product(const TruncatedSeries& f);

// sum_k mu(k)/k log g(t^k). Throws UnitConstantError unless g(0) = 1.
TruncatedSeries pl(const TruncatedSeries& g);

}  // namespace tilingforge
