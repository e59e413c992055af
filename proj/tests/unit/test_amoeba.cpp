#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "tilingforge/amoeba.hpp"
#include "tilingforge/error.hpp"

using namespace tilingforge;

namespace {

ComplexLaurent C(const std::string& s) { return complex_coefficients(parse_laurent(s)); }

using Key = std::array<double, 4>;

std::vector<Key> keys(const CurveSamples& s, bool transpose) {
    std::vector<Key> out;
    for (const auto& p : s.points)
        out.push_back(transpose ? Key{p.rho_w, p.rho_z, p.phi_w, p.phi_z} : Key{p.rho_z, p.rho_w, p.phi_z, p.phi_w});
    std::sort(out.begin(), out.end());
    return out;
}

double angle_gap(double a, double b) {
    const double d = std::fmod(std::abs(a - b), 2 * std::numbers::pi);
    return std::min(d, 2 * std::numbers::pi - d);
}

}  // namespace

TEST_CASE("linear curve at z = -2 has w = 1") {
    const ComplexLaurent p = C("1 + z + w");
    std::vector<std::complex<double>> roots;
    REQUIRE(sample_fiber(p, {-2, 0}, roots));
    REQUIRE(roots.size() == 1);
    CHECK(std::abs(roots[0] - std::complex<double>(1, 0)) < 1e-12);
    CHECK(relative_residual(p, {-2, 0}, roots[0]) < 1e-12);
    CHECK(std::log(2.0) == doctest::Approx(std::log(std::abs(std::complex<double>(-2, 0)))));
    CHECK(std::arg(std::complex<double>(-2, 0)) == doctest::Approx(std::numbers::pi));
}

TEST_CASE("conifold fiber over z = -1 vanishes") {
    std::vector<std::complex<double>> roots;
    CHECK_FALSE(sample_fiber(C("1 + z + w + zw"), {-1, 0}, roots));
    CHECK(sample_fiber(C("1 + z + w + zw"), {-2, 0}, roots));
}

TEST_CASE("vanishing fibers are skipped with a diagnostic") {
    // (1 - z)(1 + w): the fiber over z = 1 sits on the grid for odd step counts
    const CurveSamples s = sample_curve(C("1 + w - z - zw"), {2, 21});
    CHECK(s.skipped_fibers >= 1);
    REQUIRE_FALSE(s.diagnostics.empty());
    CHECK(s.diagnostics[0].find("vanishes") != std::string::npos);
}

TEST_CASE("every emitted point satisfies the residual bound") {
    const CurveSamples s = sample_curve(C("1 + z + w + zw"), {3, 40});
    CHECK_FALSE(s.points.empty());
    for (const auto& p : s.points) CHECK(p.residual < 1e-8);
}

TEST_CASE("swapping z and w transposes the cloud") {
    const LaurentPoly2 p = parse_laurent("1 + z + w - 3zw + z^2w");
    const auto a = keys(sample_curve(complex_coefficients(p), {3, 30}), false);
    const auto b = keys(sample_curve(complex_coefficients(p.swapped()), {3, 30}), true);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(std::abs(a[i][0] - b[i][0]) < 1e-6);
        CHECK(std::abs(a[i][1] - b[i][1]) < 1e-6);
        CHECK(angle_gap(a[i][2], b[i][2]) < 1e-6);
        CHECK(angle_gap(a[i][3], b[i][3]) < 1e-6);
    }
}

TEST_CASE("conifold swap symmetry") {
    const auto a = keys(sample_curve(C("1 + z + w + zw"), {4, 50}), false);
    const auto b = keys(sample_curve(C("1 + z + w + zw"), {4, 50}), true);
    REQUIRE(a.size() == b.size());
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max({worst, std::abs(a[i][0] - b[i][0]), std::abs(a[i][1] - b[i][1])});
    CHECK(worst < 1e-6);
}

TEST_CASE("sampling is deterministic") {
    const ComplexLaurent p = C("z^-1w^-1 - w^-1 - z^-1 - 6 - z - w + zw");
    CHECK(sample_curve(p, {3, 25}).to_csv() == sample_curve(p, {3, 25}).to_csv());
}

TEST_CASE("monomials have no curve") { CHECK_THROWS_AS(sample_curve(C("3zw")), DegenerateError); }

TEST_CASE("coefficient overrides") {
    const auto [pt, c] = parse_override("1,-1=0.5,2");
    CHECK(pt == LatticePoint{1, -1});
    CHECK(c == std::complex<double>(0.5, 2));
    CHECK(parse_override("0,0=-1").second == std::complex<double>(-1, 0));
    CHECK_THROWS_AS(parse_override("1=2"), ParseError);
    const ComplexLaurent p = complex_coefficients(parse_laurent("1 + z"), {{{0, 1}, {0, 1}}});
    CHECK(p.size() == 3);
    CHECK(p.at({0, 1}) == std::complex<double>(0, 1));
}

TEST_CASE("CSV header") {
    CHECK(sample_curve(C("1 + z + w"), {1, 4}).to_csv().rfind("rho_z,rho_w,phi_z,phi_w,residual\n", 0) == 0);
}

TEST_CASE("dp3 with unit-modulus coefficients on a 200x200 grid") {
    const LaurentPoly2 det = parse_laurent("z^-1w^-1 - w^-1 - z^-1 - 6 - z - w + zw");
    std::map<LatticePoint, std::complex<double>> ov;
    int k = 0;
    for (const auto& term : det.terms()) ov[term.first] = std::polar(1.0, 0.7 * ++k);
    const ComplexLaurent p = complex_coefficients(det, ov);
    const auto t0 = std::chrono::steady_clock::now();
    const CurveSamples s = sample_curve(p, {4, 200});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(secs < 10.0);
    CHECK_FALSE(s.points.empty());
    for (const auto& pt : s.points) CHECK(pt.residual < 1e-8);
}
