#include "tilingforge/modular.hpp"

#include <cmath>
#include <numbers>

#include "tilingforge/error.hpp"

namespace tilingforge {

std::complex<double> tau_reduce(std::complex<double> tau) {
    if (!(tau.imag() > 0)) throw PreconditionError("tau must lie in the upper half plane");
    constexpr double eps = 1e-12;
    for (int it = 0; it < 10000; ++it) {
        tau -= std::round(tau.real());
        if (std::norm(tau) < 1 - eps) {
            tau = -1.0 / tau;
            continue;
        }
        break;
    }
    if (tau.real() > 0.5 - eps) tau -= 1.0;
    if (std::abs(std::norm(tau) - 1) <= eps && tau.real() > eps) tau = -1.0 / tau;
    return tau;
}

namespace {

constexpr int kTerms = 64;

double divisor_power_sum(int n, int k) {
    double s = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) s += std::pow(static_cast<double>(d), k);
    return s;
}

}  // namespace

KleinJ klein_j(std::complex<double> tau) {
    const std::complex<double> t = tau_reduce(tau);
    const std::complex<double> q = std::exp(2.0 * std::numbers::pi * std::complex<double>(0, 1) * t);
    const double aq = std::abs(q);

    // sigma_5(n) <= zeta(5) n^5 < 1.04 n^5 bounds both tails.
    double tail = 0;
    for (int n = kTerms + 1; n < kTerms + 400; ++n) tail += 504 * 1.04 * std::pow(n, 5.0) * std::pow(aq, n);
    if (!(tail <= 1e-10)) throw PrecisionError("q-series tail bound " + std::to_string(tail) + " exceeds 1e-10");

    std::complex<double> e4 = 1, e6 = 1, qn = 1;
    for (int n = 1; n <= kTerms; ++n) {
        qn *= q;
        e4 += 240.0 * divisor_power_sum(n, 3) * qn;
        e6 -= 504.0 * divisor_power_sum(n, 5) * qn;
    }
    const std::complex<double> e4c = e4 * e4 * e4;
    KleinJ out;
    out.j = 1728.0 * e4c / (e4c - e6 * e6);
    out.J = out.j / 1728.0;
    return out;
}

ModularData modular_data(const Periods& p) {
    ModularData d;
    d.omega1 = p.omega1;
    d.omega2 = p.omega2;
    d.tau = p.omega2 / p.omega1;
    d.reduced_tau = tau_reduce(d.tau);
    d.j = klein_j(d.tau);
    return d;
}

}  // namespace tilingforge
