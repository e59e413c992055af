#include <doctest.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <numbers>

#include "helpers.hpp"
#include "tilingforge/error.hpp"
#include "tilingforge/geometry.hpp"
#include "tilingforge/modular.hpp"

using namespace tilingforge;

namespace {

using cld = std::complex<long double>;

// j from Jacobi theta constants, summed to 256 terms in long double.
std::complex<double> theta_j(std::complex<double> tau) {
    const cld t(tau.real(), tau.imag());
    const cld i_pi(0, std::numbers::pi_v<long double>);
    cld th2 = 0, th3 = 1, th4 = 1;
    for (int n = 0; n < 256; ++n) {
        const long double h = n + 0.5L;
        th2 += 2.0L * std::exp(i_pi * t * (h * h));
        if (n > 0) {
            const cld q = std::exp(i_pi * t * static_cast<long double>(n * n));
            th3 += 2.0L * q;
            th4 += (n % 2 ? -2.0L : 2.0L) * q;
        }
    }
    const cld s = std::pow(th2, 8) + std::pow(th3, 8) + std::pow(th4, 8);
    const cld j = 32.0L * s * s * s / std::pow(th2 * th3 * th4, 8);
    return {static_cast<double>(j.real()), static_cast<double>(j.imag())};
}

const std::complex<double> kRho{-0.5, std::sqrt(3.0) / 2};

RChargeAssignment amax(const std::string& name) { return maximize_a(fixture(name).map); }

}  // namespace

TEST_CASE("honeycomb constraint system") {
    const RChargeSystem s = rcharge_constraints(fixture("c3").map);
    CHECK(s.num_edges() == 3);
    CHECK(s.dimension() == 2);
    for (const auto& r : s.particular) CHECK(r == Rational(2, 3));
}

TEST_CASE("F0 constraint systems have three free directions") {
    // exact elimination over the rationals
    CHECK(rcharge_constraints(fixture("f0-I").map).dimension() == 3);
    CHECK(rcharge_constraints(fixture("f0-II").map).dimension() == 3);
}

TEST_CASE("particular solutions satisfy every constraint exactly") {
    for (const auto& name : fixture_names()) {
        const RChargeSystem s = rcharge_constraints(fixture(name).map);
        for (std::size_t row = 0; row < s.matrix.size(); ++row) {
            Rational acc = 0;
            for (std::size_t e = 0; e < s.num_edges(); ++e) acc += s.matrix[row][e] * s.particular[e];
            CHECK(acc == s.rhs[row]);
            for (const auto& v : s.nullspace) {
                Rational z = 0;
                for (std::size_t e = 0; e < s.num_edges(); ++e) z += s.matrix[row][e] * v[e];
                CHECK(z == 0);
            }
        }
    }
}

TEST_CASE("genus-0 input is refused") { CHECK_THROWS_AS(rcharge_constraints(tf_test::single_edge()), GenusError); }

TEST_CASE("a-maximization on the honeycomb") {
    const RChargeAssignment r = amax("c3");
    for (double x : r.r) CHECK(x == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
    CHECK(r.unique);
    CHECK(r.residual < 1e-9);
    CHECK(r.objective == doctest::Approx(-1.0 / 9.0));
    CHECK(r.theta[0] == doctest::Approx(std::numbers::pi / 3));
}

TEST_CASE("a-maximization on both F0 phases") {
    const RChargeAssignment one = amax("f0-I");
    for (double x : one.r) CHECK(std::abs(x - 0.5) < 1e-6);
    const Fixture f2 = fixture("f0-II");
    const RChargeAssignment two = maximize_a(f2.map);
    int halves = 0, ones = 0;
    for (std::size_t e = 0; e < two.r.size(); ++e) {
        halves += std::abs(two.r[e] - 0.5) < 1e-6;
        ones += std::abs(two.r[e] - 1.0) < 1e-6;
    }
    CHECK(halves == 8);
    CHECK(ones == 4);
    CHECK(two.unique);
}

TEST_CASE("a-maximization matches stored expectations and is fast") {
    for (const auto& name : fixture_names()) {
        const Fixture f = fixture(name);
        CAPTURE(name);
        const auto t0 = std::chrono::steady_clock::now();
        const RChargeAssignment r = maximize_a(f.map);
        CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 5.0);
        CHECK(r.gradient_norm < 1e-10);
        CHECK(r.residual < 1e-9);
        for (double x : r.r) CHECK((x > 0 && x < 2));
        if (f.expected.rcharges)
            for (std::size_t e = 0; e < r.r.size(); ++e) CHECK(std::abs(r.r[e] - (*f.expected.rcharges)[e]) < 1e-6);
    }
}

TEST_CASE("a-maximization is deterministic for a seed") {
    const CombinatorialMap m = dp3_fixture().map;
    AMaxOptions opt;
    opt.seed = 99;
    const RChargeAssignment a = maximize_a(m, opt);
    const RChargeAssignment b = maximize_a(m, opt);
    CHECK(a.r == b.r);
    CHECK(a.objective == b.objective);
}

TEST_CASE("periods give the expected modulus") {
    const std::map<std::string, std::complex<double>> tau = {
        {"c3", kRho}, {"c3z3", kRho}, {"conifold", {0, 1}}, {"f0-I", {0, 1}}, {"f0-II", {0, 1}}, {"dp3", kRho}};
    for (const auto& [name, expect] : tau) {
        const Fixture f = fixture(name);
        CAPTURE(name);
        const Periods p = isoradial_periods(f.map, maximize_a(f.map));
        CHECK(p.closure_error < 1e-9);
        CHECK(p.fit_residual < 1e-9);
        const ModularData md = modular_data(p);
        CHECK(md.tau.imag() > 0);
        CHECK(std::abs(md.reduced_tau - expect) < 1e-6);
    }
}

TEST_CASE("periods need feasible charges") {
    const CombinatorialMap m = fixture("c3").map;
    CHECK_THROWS_AS(isoradial_periods(m, assignment_from({0.5, 0.5, 0.5})), PreconditionError);
    CHECK_THROWS_AS(isoradial_periods(m, assignment_from({2.0, 0.0, 0.0})), PreconditionError);
}

TEST_CASE("tau reduction") {
    CHECK(std::abs(tau_reduce({5, 1}) - std::complex<double>(0, 1)) < 1e-12);
    CHECK(std::abs(tau_reduce(kRho) - kRho) < 1e-12);
    const std::complex<double> t(0.2, 0.1);
    const std::complex<double> r = tau_reduce(t);
    CHECK(std::abs(r) >= 1 - 1e-12);
    CHECK(std::abs(r.real()) <= 0.5 + 1e-12);
    CHECK(std::abs(theta_j(t) - klein_j(r).j) / std::abs(klein_j(r).j) < 1e-8);
    CHECK_THROWS_AS(tau_reduce({0, -1}), PreconditionError);
}

TEST_CASE("Klein j at special points") {
    CHECK(std::abs(klein_j({0, 1}).J - 1.0) < 1e-8);
    CHECK(std::abs(klein_j({0, 1}).j - 1728.0) < 1e-5);
    CHECK(std::abs(klein_j(kRho).J) < 1e-8);
    const std::complex<double> j2 = klein_j({0, 2}).j;
    CHECK(std::abs(j2 - 287496.0) / 287496.0 < 1e-6);
    CHECK(std::abs(j2 - theta_j({0, 2})) / 287496.0 < 1e-6);
}

TEST_CASE("Klein j agrees with the theta oracle across the fundamental domain") {
    for (std::complex<double> t : {std::complex<double>(0.3, 1.2), {-0.45, 0.95}, {0.1, 3.0}, {0.5, 0.9}}) {
        const auto a = klein_j(t).j, b = theta_j(t);
        CHECK(std::abs(a - b) / std::max(1.0, std::abs(b)) < 1e-8);
    }
}

TEST_CASE("J is equal on the two F0 phases") {
    const auto J = [](const std::string& n) {
        const Fixture f = fixture(n);
        return modular_data(isoradial_periods(f.map, maximize_a(f.map))).j.J;
    };
    CHECK(std::abs(J("f0-I") - J("f0-II")) < 1e-6);
    CHECK(std::abs(J("c3")) < 1e-6);
}
