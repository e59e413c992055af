#pragma once

#include <complex>

#include "tilingforge/geometry.hpp"

namespace tilingforge {

// Gauss reduction into |Re tau| <= 1/2, |tau| >= 1 using T and S. Points on
// the boundary are moved to the left half (Re tau = -1/2, or Re tau <= 0 on
// the unit circle). Throws PreconditionError unless Im tau > 0.
std::complex<double> tau_reduce(std::complex<double> tau);

struct KleinJ {
    std::complex<double> j;  // j(i) = 1728
    std::complex<double> J;  // j / 1728
};

// 1728 E4^3 / (E4^3 - E6^2) with Eisenstein q-series truncated at n = 64,
// evaluated at the reduced point. Throws PrecisionError if the tail bound
// exceeds 1e-10.
KleinJ klein_j(std::complex<double> tau);

struct ModularData {
    std::complex<double> omega1, omega2;
    std::complex<double> tau;
    std::complex<double> reduced_tau;
    KleinJ j;
};

ModularData modular_data(const Periods& p);

}  // namespace tilingforge
