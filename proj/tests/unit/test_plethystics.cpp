#include <doctest.h>

#include <random>

#include "tilingforge/error.hpp"
#include "tilingforge/plethystics.hpp"

using namespace tilingforge;

namespace {

TruncatedSeries S(const std::string& coeffs, std::size_t n) {
    return TruncatedSeries(parse_coefficients(coeffs), n);
}

TruncatedSeries conifold_hilbert(std::size_t n) {
    return series_from_rational(parse_coefficients("1,0,-1"), parse_coefficients("1,-4,6,-4,1"), n);
}

}  // namespace

TEST_CASE("coefficient parsing") {
    const auto c = parse_coefficients("1, -2, 3/4");
    REQUIRE(c.size() == 3);
    CHECK(c[2] == Rational(3, 4));
    CHECK_THROWS_AS(parse_coefficients("1,x"), ParseError);
}

TEST_CASE("series from rational functions") {
    CHECK(conifold_hilbert(6).to_string() == "1 + 4t + 9t^2 + 16t^3 + 25t^4 + 36t^5 + 49t^6");
    const TruncatedSeries geo = series_from_rational({1}, {1, -1}, 12);
    for (std::size_t k = 0; k <= 12; ++k) CHECK(geo[k] == 1);
    CHECK_THROWS_AS(series_from_rational({1}, {0, 1}, 5), DivisionByZeroConstantError);
}

TEST_CASE("Mobius function") {
    const int expect[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
    for (std::size_t k = 1; k <= 12; ++k) CHECK(mobius(k) == expect[k - 1]);
    CHECK(mobius(30) == -1);
}

TEST_CASE("plethystic exponential") {
    const TruncatedSeries one = pe(S("0,1", 10));
    for (std::size_t k = 0; k <= 10; ++k) CHECK(one[k] == 1);
    CHECK(pe(S("0,3", 4)).to_string() == "1 + 3t + 6t^2 + 10t^3 + 15t^4");
    CHECK(pe(TruncatedSeries::constant(0, 8)) == TruncatedSeries::constant(1, 8));
    // the constant term is dropped, as in exp(sum (f(t^n) - f(0)) / n)
    CHECK(pe(S("1,1", 4)) == pe(S("0,1", 4)));
}

TEST_CASE("the two PE formulas agree") {
    for (const char* c : {"0,1", "0,3,-1", "0,1/2,0,2", "0,-2,5"})
        CHECK(pe(S(c, 15)) == pe_euler_product(S(c, 15)));
}

TEST_CASE("conifold generators and relation") {
    const TruncatedSeries g = pl(conifold_hilbert(30));
    CHECK(g.order() == 30);
    CHECK(g[1] == 4);
    CHECK(g[2] == -1);
    CHECK(g[0] == 0);
    for (std::size_t k = 3; k <= 30; ++k) CHECK(g[k] == 0);
    CHECK(g.to_string() == "4t - t^2");
}

TEST_CASE("free generators and trivial inputs") {
    const TruncatedSeries c3 = series_from_rational({1}, parse_coefficients("1,-3,3,-1"), 20);
    CHECK(pl(c3).to_string() == "3t");
    CHECK(pl(TruncatedSeries::constant(1, 10)).degree() < 0);
    CHECK_THROWS_AS(pl(S("2,1", 5)), UnitConstantError);
}

TEST_CASE("pl inverts pe on random series") {
    std::mt19937_64 rng(0x5EED);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> c(21);
        c[0] = 0;
        for (std::size_t k = 1; k <= 20; ++k) {
            c[k] = Rational(num(rng), den(rng));
            c[k].canonicalize();
        }
        const TruncatedSeries f(c, 20);
        CHECK(pl(pe(f)) == f);
    }
}

TEST_CASE("series arithmetic and printing") {
    const TruncatedSeries a = S("1,2", 4), b = S("1,-2", 4);
    CHECK((a * b).to_string() == "1 - 4t^2");
    CHECK((a + b).to_string() == "2");
    CHECK((a - b).to_string() == "4t");
    CHECK(S("1,0,0,1/2", 4).to_string() == "1 + (1/2)t^3");
    CHECK(S("0,0,-3/2", 4).to_string() == "-(3/2)t^2");
    CHECK(S("0,1,2", 5).to_list() == "0,1,2,0,0,0");
}
