#pragma once

#include <complex>
#include <map>
#include <string>

#include <gmpxx.h>

#include "tilingforge/lattice.hpp"

namespace tilingforge {

// Bivariate Laurent polynomial sum c * z^a * w^b with exact integer
// coefficients. Zero coefficients are never stored.
class LaurentPoly2 {
public:
    using Terms = std::map<LatticePoint, mpz_class>;

    LaurentPoly2() = default;
    explicit LaurentPoly2(const mpz_class& constant);

    static LaurentPoly2 monomial(const mpz_class& coeff, std::int64_t a, std::int64_t b);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    mpz_class coefficient(const LatticePoint& p) const;

    void add_term(const LatticePoint& p, const mpz_class& c);

    LaurentPoly2& operator+=(const LaurentPoly2& o);
    LaurentPoly2& operator-=(const LaurentPoly2& o);
    LaurentPoly2& operator*=(const LaurentPoly2& o);
    friend LaurentPoly2 operator+(LaurentPoly2 l, const LaurentPoly2& r) { return l += r; }
    friend LaurentPoly2 operator-(LaurentPoly2 l, const LaurentPoly2& r) { return l -= r; }
    friend LaurentPoly2 operator*(LaurentPoly2 l, const LaurentPoly2& r) { return l *= r; }
    LaurentPoly2 operator-() const;
    friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

    // Multiply by z^shift.a w^shift.b.
    LaurentPoly2 shifted(const LatticePoint& shift) const;
    // Swap the roles of z and w.
    LaurentPoly2 swapped() const;

    std::complex<double> evaluate(std::complex<double> z, std::complex<double> w) const;

    // "c*z^a*w^b" terms in ascending (a, b) order joined with " + ";
    // "0" for the zero polynomial.
    std::string to_string() const;
    // Human-facing form, e.g. "1 + z + w + zw" or "z^-1w^-1 - 6 + zw": terms
    // by total degree, then by descending z exponent.
    std::string pretty() const;

private:
    Terms terms_;
};

// Parses either the canonical to_string() form or the looser pretty form
// ("1 + z + w", "-z^-1*w - 6 + z w", ...). Throws ParseError.
LaurentPoly2 parse_laurent(const std::string& text);

// True if a == s * z^u w^v * b for a sign s and a monomial shift (u, v).
bool equal_up_to_unit(const LaurentPoly2& a, const LaurentPoly2& b);

}  // namespace tilingforge
