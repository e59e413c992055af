#include <doctest.h>

#include <chrono>

#include "helpers.hpp"
#include "tilingforge/error.hpp"
#include "tilingforge/homology.hpp"
#include "tilingforge/toric.hpp"

using namespace tilingforge;

namespace {

LaurentPoly2 P(const std::string& s) { return parse_laurent(s); }

ToricDiagram diagram(std::initializer_list<std::tuple<std::int64_t, std::int64_t, std::uint64_t>> pts) {
    ToricDiagram::Points p;
    for (auto [a, b, m] : pts) p[{a, b}] = m;
    return ToricDiagram(p);
}

const LaurentPoly2 kDp3 = P("z^-1w^-1 - w^-1 - z^-1 - 6 - z - w + zw");

}  // namespace

TEST_CASE("Laurent parsing and printing") {
    const LaurentPoly2 p = P("1 + z + w");
    CHECK(p.size() == 3);
    CHECK(p.pretty() == "1 + z + w");
    CHECK(P(p.to_string()) == p);
    CHECK(P(kDp3.to_string()) == kDp3);
    CHECK(kDp3.coefficient({0, 0}) == -6);
    CHECK(P("2z^2w^-3 - 5").coefficient({2, -3}) == 2);
    CHECK_THROWS_AS(P("1 + q"), ParseError);
    CHECK(equal_up_to_unit(kDp3, -kDp3.shifted({3, -1})));
    CHECK_FALSE(equal_up_to_unit(P("1 + z + w"), P("1 + z + 2w")));
}

TEST_CASE("honeycomb accepts all-plus signs") {
    const CombinatorialMap m = fixture("c3").map;
    CHECK(satisfies_kasteleyn_condition(m, EdgeSigns(3, 1)));
    CHECK(satisfies_kasteleyn_condition(m, kasteleyn_signs(m)));
}

TEST_CASE("conifold square needs an odd number of minus signs") {
    const CombinatorialMap m = fixture("conifold").map;
    const EdgeSigns s = kasteleyn_signs(m);
    CHECK(satisfies_kasteleyn_condition(m, s));
    CHECK(std::count(s.begin(), s.end(), -1) == 1);
    CHECK_FALSE(satisfies_kasteleyn_condition(m, EdgeSigns(4, 1)));
}

TEST_CASE("Kasteleyn signs exist on every fixture and for any free choice") {
    for (const auto& name : fixture_names()) {
        const Fixture f = fixture(name);
        CAPTURE(name);
        CHECK(satisfies_kasteleyn_condition(f.map, kasteleyn_signs(f.map)));
        CHECK(satisfies_kasteleyn_condition(f.map, kasteleyn_signs(f.map, 12345)));
        if (f.signs) CHECK(satisfies_kasteleyn_condition(f.map, *f.signs));
    }
}

TEST_CASE("Kasteleyn signs are refused off the torus") {
    CHECK_THROWS_AS(kasteleyn_signs(tf_test::single_edge()), GenusError);
}

TEST_CASE("honeycomb Kasteleyn matrix") {
    const CombinatorialMap m = fixture("c3").map;
    const KasteleynMatrix k = kasteleyn_matrix(m, EdgeSigns(3, 1), homology_weights(m));
    REQUIRE(k.rows() == 1);
    REQUIRE(k.cols() == 1);
    CHECK(k.entries[0][0] == P("1 + z + w"));
    CHECK(toric_diagram(laurent_det(k)) == diagram({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}));
}

TEST_CASE("dp3 matrix carries twelve monomials") {
    const Fixture f = dp3_fixture();
    const KasteleynMatrix k = kasteleyn_matrix(f.map, *f.signs, *f.weights);
    REQUIRE(k.rows() == 3);
    REQUIRE(k.cols() == 3);
    std::size_t monomials = 0;
    for (const auto& row : k.entries)
        for (const auto& e : row) monomials += e.size();
    CHECK(monomials == 12);
    CHECK(k.entries[0][0] == P("1 + w"));
    CHECK(k.entries[0][1] == P("1 - zw"));
    CHECK(k.entries[0][2] == P("1 + z"));
}

TEST_CASE("empty map has no Kasteleyn matrix") {
    CHECK_THROWS_AS(kasteleyn_matrix(CombinatorialMap(), {}, HomologyWeights{}), DimensionError);
}

TEST_CASE("dp3 determinant is reproduced exactly") {
    const Fixture f = dp3_fixture();
    const auto t0 = std::chrono::steady_clock::now();
    const LaurentPoly2 d = laurent_det(kasteleyn_matrix(f.map, *f.signs, *f.weights));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(d == kDp3);
    CHECK(secs < 0.1);
}

TEST_CASE("dp3 with computed signs and weights is GL(2,Z)-equivalent") {
    const Fixture f = dp3_fixture();
    const ToricDiagram auto_d = toric_diagram_of(f.map);
    CHECK(canonical_polygon(auto_d) == canonical_polygon(toric_diagram(kDp3)));
}

TEST_CASE("small determinants") {
    KasteleynMatrix one{{{P("2 + z - 3w")}}};
    CHECK(laurent_det(one) == P("2 + z - 3w"));
    // [[1, -z], [w, 1]] expands to 1 + zw
    KasteleynMatrix two{{{P("1"), P("-z")}, {P("w"), P("1")}}};
    CHECK(laurent_det(two) == P("1 + zw"));
    KasteleynMatrix bad{{{P("1"), P("1")}}};
    CHECK_THROWS_AS(laurent_det(bad), DimensionError);
}

TEST_CASE("toric diagrams of determinants") {
    CHECK(toric_diagram(kDp3) ==
          diagram({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {2, 1, 1}, {1, 2, 1}, {2, 2, 1}, {1, 1, 6}}));
    CHECK(toric_diagram(P("1 + z + w")) == diagram({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}));
    CHECK(toric_diagram(P("5")) == diagram({{0, 0, 5}}));
    CHECK(toric_diagram(P("-z^-2w + 3")).multiplicity({2, 0}) == 3);
}

TEST_CASE("matching enumeration agrees with the determinant on every fixture") {
    const std::map<std::string, std::size_t> counts = {{"c3", 3},    {"c3z3", 6},  {"conifold", 4},
                                                       {"f0-I", 8}, {"f0-II", 9}, {"dp3", 12}};
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& name : fixture_names()) {
        const Fixture f = fixture(name);
        CAPTURE(name);
        const HomologyWeights h = f.weights ? *f.weights : homology_weights(f.map);
        const MatchingSet ms = enumerate_matchings(f.map, h);
        CHECK(ms.matchings.size() == counts.at(name));
        CHECK(ms.multiplicities().normalized() == toric_diagram(tf_test::fixture_det(f)));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(secs < 2.0);
}

TEST_CASE("honeycomb and square matchings") {
    const Fixture c3 = fixture("c3");
    const MatchingSet hc = enumerate_matchings(c3.map, homology_weights(c3.map));
    CHECK(hc.multiplicities().normalized() == diagram({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}));

    const Fixture con = fixture("conifold");
    const MatchingSet sq = enumerate_matchings(con.map, homology_weights(con.map));
    CHECK(sq.matchings.size() == 4);
    CHECK(canonical_polygon(sq.multiplicities()) == canonical_polygon(diagram({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}})));
}

TEST_CASE("dp3 matchings: six at the centre") {
    const Fixture f = dp3_fixture();
    const ToricDiagram d = enumerate_matchings(f.map, *f.weights).multiplicities().normalized();
    CHECK(d.multiplicity({1, 1}) == 6);
    for (LatticePoint p : {LatticePoint{0, 0}, {1, 0}, {0, 1}, {2, 1}, {1, 2}, {2, 2}}) CHECK(d.multiplicity(p) == 1);
}

TEST_CASE("a reference matching shifts the lattice points") {
    const Fixture f = fixture("conifold");
    const HomologyWeights h = homology_weights(f.map);
    const MatchingSet base = enumerate_matchings(f.map, h);
    const MatchingSet shifted = enumerate_matchings(f.map, h, base.matchings.back().edges);
    CHECK(shifted.multiplicities().normalized() == base.multiplicities().normalized());
    CHECK(shifted.multiplicities().multiplicity({0, 0}) == 1);
    CHECK_THROWS_AS(enumerate_matchings(f.map, h, std::vector<std::size_t>{0, 0, 0}), PreconditionError);
}

TEST_CASE("canonical polygon ignores GL(2,Z) and translation") {
    const ToricDiagram tri = diagram({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}});
    CHECK(canonical_polygon(transformed(tri, 1, 1, 0, 1)) == canonical_polygon(tri));
    const ToricDiagram hex = toric_diagram(kDp3);
    CHECK(canonical_polygon(transformed(hex, 0, -1, 1, 0)) == canonical_polygon(hex));
    CHECK(canonical_polygon(hex.translated({5, -7})) == canonical_polygon(hex));
    CHECK_FALSE(canonical_polygon(tri) == canonical_polygon(diagram({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}})));
    CHECK(twice_area(convex_hull({{0, 0}, {2, 0}, {0, 2}, {1, 1}})) == 4);
}

TEST_CASE("Newton polynomials and mirror equations") {
    const ToricDiagram tri = diagram({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}});
    const ToricDiagram sq = diagram({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    CHECK(newton_polynomial(tri) == P("1 + z + w"));
    CHECK(newton_polynomial(sq) == P("1 + z + w + zw"));
    CHECK_THROWS_AS(newton_polynomial(ToricDiagram()), ZeroPolynomialError);
    CHECK(mirror_equation(tri) == "uv = 1 + z + w");
    CHECK(mirror_equation(sq) == "uv = 1 + z + w + zw");
    CHECK(mirror_equation(diagram({{0, 0, 1}})) == "uv = 1");
    CHECK(newton_polynomial(tri, std::vector<mpz_class>{2, -1, 3}) == P("2 - w + 3z"));
}

TEST_CASE("toric diagram text round trip") {
    const ToricDiagram d = toric_diagram(kDp3);
    CHECK(ToricDiagram::from_text(d.to_text()) == d);
    CHECK(d.to_text().rfind("0 0 1\n", 0) == 0);
}
