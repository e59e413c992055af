#include "tilingforge/amoeba.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "tilingforge/error.hpp"

namespace tilingforge {

using cplx = std::complex<double>;

ComplexLaurent complex_coefficients(const LaurentPoly2& p, const std::map<LatticePoint, cplx>& overrides) {
    ComplexLaurent out;
    for (const auto& [pt, c] : p.terms()) out[pt] = c.get_d();
    for (const auto& [pt, c] : overrides) out[pt] = c;
    std::erase_if(out, [](const auto& kv) { return kv.second == cplx(0, 0); });
    return out;
}

std::pair<LatticePoint, cplx> parse_override(const std::string& text) {
    long long a = 0, b = 0;
    double re = 0, im = 0;
    int consumed = 0;
    const int n = std::sscanf(text.c_str(), "%lld,%lld=%lf%n", &a, &b, &re, &consumed);
    if (n != 3) throw ParseError("coefficient override must look like 'a,b=re[,im]': " + text);
    std::string rest = text.substr(static_cast<std::size_t>(consumed));
    if (!rest.empty()) {
        int more = 0;
        if (std::sscanf(rest.c_str(), ",%lf%n", &im, &more) != 1 || static_cast<std::size_t>(more) != rest.size())
            throw ParseError("coefficient override must look like 'a,b=re[,im]': " + text);
    }
    return {LatticePoint{a, b}, cplx(re, im)};
}

namespace {

double two_pi() { return 2 * std::numbers::pi; }

double wrap(double angle) {
    double a = std::fmod(angle, two_pi());
    if (a < 0) a += two_pi();
    if (a >= two_pi()) a -= two_pi();
    return a;
}

cplx horner(const std::vector<cplx>& c, cplx x) {
    cplx acc = 0;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
}

cplx horner_derivative(const std::vector<cplx>& c, cplx x) {
    cplx acc = 0;
    for (std::size_t k = c.size(); k-- > 1;) acc = acc * x + static_cast<double>(k) * c[k];
    return acc;
}

// Aberth-Ehrlich simultaneous iteration; c holds ascending coefficients with
// a nonzero leading one.
std::vector<cplx> polynomial_roots(const std::vector<cplx>& c) {
    const std::size_t deg = c.size() - 1;
    if (deg == 0) return {};
    if (deg == 1) return {-c[0] / c[1]};
    double bound = 0;
    for (std::size_t k = 0; k < deg; ++k) bound = std::max(bound, std::abs(c[k] / c[deg]));
    const double radius = 1 + bound;
    std::vector<cplx> z(deg);
    for (std::size_t k = 0; k < deg; ++k)
        z[k] = std::polar(radius * 0.5, two_pi() * static_cast<double>(k) / static_cast<double>(deg) + 0.4);
    for (int it = 0; it < 1000; ++it) {
        double worst = 0;
        for (std::size_t k = 0; k < deg; ++k) {
            const cplx ratio = horner(c, z[k]) / horner_derivative(c, z[k]);
            cplx repulsion = 0;
            for (std::size_t j = 0; j < deg; ++j)
                if (j != k) repulsion += 1.0 / (z[k] - z[j]);
            const cplx step = ratio / (1.0 - ratio * repulsion);
            if (std::isfinite(step.real()) && std::isfinite(step.imag())) {
                z[k] -= step;
                worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[k])));
            }
        }
        if (worst < 1e-15) break;
    }
    for (auto& root : z)
        for (int polish = 0; polish < 3; ++polish) {
            const cplx d = horner_derivative(c, root);
            if (d == cplx(0, 0)) break;
            const cplx step = horner(c, root) / d;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
            root -= step;
        }
    return z;
}

ComplexLaurent swapped(const ComplexLaurent& p) {
    ComplexLaurent out;
    for (const auto& [pt, c] : p) out[{pt.b, pt.a}] = c;
    return out;
}

}  // namespace

double relative_residual(const ComplexLaurent& p, cplx z, cplx w) {
    cplx sum = 0;
    double scale = 0;
    for (const auto& [pt, c] : p) {
        const cplx term = c * std::pow(z, static_cast<double>(pt.a)) * std::pow(w, static_cast<double>(pt.b));
        sum += term;
        scale = std::max(scale, std::abs(term));
    }
    return scale == 0 ? 0 : std::abs(sum) / scale;
}

bool sample_fiber(const ComplexLaurent& p, cplx z, std::vector<cplx>& roots) {
    roots.clear();
    if (p.empty()) return false;
    std::int64_t lo = p.begin()->first.b, hi = lo;
    for (const auto& [pt, c] : p) {
        lo = std::min(lo, pt.b);
        hi = std::max(hi, pt.b);
    }
    std::vector<cplx> coeffs(static_cast<std::size_t>(hi - lo + 1), 0);
    std::vector<double> scale(coeffs.size(), 0);
    for (const auto& [pt, c] : p) {
        const cplx term = c * std::pow(z, static_cast<double>(pt.a));
        coeffs[static_cast<std::size_t>(pt.b - lo)] += term;
        scale[static_cast<std::size_t>(pt.b - lo)] += std::abs(term);
    }
    // Cancellation down to rounding level counts as an exact zero.
    bool all_zero = true;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (std::abs(coeffs[k]) <= 1e-13 * scale[k]) coeffs[k] = 0;
        if (coeffs[k] != cplx(0, 0)) all_zero = false;
    }
    if (all_zero) return false;
    while (coeffs.back() == cplx(0, 0)) coeffs.pop_back();
    std::size_t zeros = 0;
    while (coeffs[zeros] == cplx(0, 0)) ++zeros;  // w = 0 roots are dropped
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(zeros));
    roots = polynomial_roots(coeffs);
    std::erase_if(roots, [](cplx r) { return std::abs(r) == 0 || !std::isfinite(std::abs(r)); });
    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return true;
}

CurveSamples sample_curve(const ComplexLaurent& p, const SampleGrid& grid) {
    if (p.size() < 2) throw DegenerateError("the curve of a monomial is empty");
    if (grid.steps < 2) throw PreconditionError("grid needs at least 2 steps per axis");
    CurveSamples out;
    const ComplexLaurent ps = swapped(p);
    std::vector<cplx> roots;
    for (int pass = 0; pass < 2; ++pass) {
        const ComplexLaurent& poly = pass == 0 ? p : ps;
        for (std::size_t i = 0; i < grid.steps; ++i) {
            const double rho = -grid.range + 2 * grid.range * static_cast<double>(i) / static_cast<double>(grid.steps - 1);
            for (std::size_t j = 0; j < grid.steps; ++j) {
                const double phi = two_pi() * static_cast<double>(j) / static_cast<double>(grid.steps);
                const cplx x = std::polar(std::exp(rho), phi);
                if (!sample_fiber(poly, x, roots)) {
                    ++out.skipped_fibers;
                    std::ostringstream os;
                    os << (pass == 0 ? "z" : "w") << "-fiber at rho=" << rho << " phi=" << phi
                       << " vanishes identically; skipped";
                    out.diagnostics.push_back(os.str());
                    continue;
                }
                for (const cplx& y : roots) {
                    const double res = relative_residual(poly, x, y);
                    if (!(res < 1e-8)) continue;
                    CurvePoint pt;
                    pt.residual = res;
                    if (pass == 0) {
                        pt.rho_z = rho;
                        pt.phi_z = wrap(phi);
                        pt.rho_w = std::log(std::abs(y));
                        pt.phi_w = wrap(std::arg(y));
                    } else {
                        pt.rho_w = rho;
                        pt.phi_w = wrap(phi);
                        pt.rho_z = std::log(std::abs(y));
                        pt.phi_z = wrap(std::arg(y));
                    }
                    out.points.push_back(pt);
                }
            }
        }
    }
    return out;
}

std::string CurveSamples::to_csv() const {
    std::ostringstream os;
    os << "rho_z,rho_w,phi_z,phi_w,residual\n";
    char buf[160];
    for (const auto& p : points) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%.3e\n", p.rho_z, p.rho_w, p.phi_z, p.phi_w, p.residual);
        os << buf;
    }
    return os.str();
}

}  // namespace tilingforge
