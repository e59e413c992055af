#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "tilingforge/laurent.hpp"

namespace tilingforge {

// Laurent polynomial with complex coefficients, used for numerical sampling.
using ComplexLaurent = std::map<LatticePoint, std::complex<double>>;

// Integer coefficients of p, with selected monomials replaced. Overrides at
// points outside the support add new monomials.
ComplexLaurent complex_coefficients(const LaurentPoly2& p,
                                    const std::map<LatticePoint, std::complex<double>>& overrides = {});

// "a,b=re[,im]" -> override entry. Throws ParseError.
std::pair<LatticePoint, std::complex<double>> parse_override(const std::string& text);

struct CurvePoint {
    double rho_z = 0, rho_w = 0;  // log|z|, log|w|
    double phi_z = 0, phi_w = 0;  // arguments in [0, 2 pi)
    double residual = 0;          // |P| over the largest monomial magnitude
};

struct CurveSamples {
    std::vector<CurvePoint> points;
    std::vector<std::string> diagnostics;
    std::size_t skipped_fibers = 0;

    // Header "rho_z,rho_w,phi_z,phi_w,residual".
    std::string to_csv() const;
};

struct SampleGrid {
    double range = 4;        // rho in [-range, range]
    std::size_t steps = 200;  // samples per axis for rho and for phi
};

// Nonzero roots w of P(z, w) = 0 for fixed z, sorted by (real, imag).
// Returns false (and no roots) when the fiber polynomial vanishes
// identically at this z.
bool sample_fiber(const ComplexLaurent& p, std::complex<double> z, std::vector<std::complex<double>>& roots);

double relative_residual(const ComplexLaurent& p, std::complex<double> z, std::complex<double> w);

// z-fibers over the (rho, phi) grid, then w-fibers with the roles swapped,
// merged in grid order. Throws DegenerateError for a monomial.
CurveSamples sample_curve(const ComplexLaurent& p, const SampleGrid& grid = {});

}  // namespace tilingforge
