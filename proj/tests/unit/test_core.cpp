#include <doctest.h>

#include "helpers.hpp"
#include "tilingforge/error.hpp"
#include "tilingforge/homology.hpp"
#include "tilingforge/json_io.hpp"
#include "tilingforge/quiver.hpp"

using namespace tilingforge;
using tf_test::term;

TEST_CASE("clover quiver validates with counts 1,3,2") {
    const ValidationReport v = validate_quiver(c3_quiver());
    CHECK(v.ok());
    CHECK(v.n0 == 1);
    CHECK(v.n1 == 3);
    CHECK(v.n2 == 2);
}

TEST_CASE("orbifold quiver validates with counts 3,9,6") {
    const ValidationReport v = validate_quiver(c3z3_quiver());
    CHECK(v.ok());
    CHECK(v.n0 == 3);
    CHECK(v.n1 == 9);
    CHECK(v.n2 == 6);
}

TEST_CASE("a single term breaks the toric condition") {
    const Quiver q({"1"}, {{"X", "1", "1"}, {"Y", "1", "1"}, {"Z", "1", "1"}}, {term(1, {"X", "Y", "Z"})});
    const ValidationReport v = validate_quiver(q);
    CHECK_FALSE(v.toric);
    CHECK_FALSE(v.ok());
    CHECK_FALSE(v.diagnostics.empty());
}

TEST_CASE("open words are reported") {
    const Quiver q({"1", "2"}, {{"A", "1", "2"}, {"B", "1", "2"}}, {term(1, {"A", "B"}), term(-1, {"B", "A"})});
    CHECK_FALSE(validate_quiver(q).cycles);
}

TEST_CASE("every fixture quiver validates") {
    for (const auto& name : fixture_names()) {
        const Fixture f = fixture(name);
        const Quiver q = f.quiver ? *f.quiver : map_to_quiver(f.map);
        CAPTURE(name);
        CHECK(validate_quiver(q).ok());
    }
}

TEST_CASE("clover dualizes to the hexagonal honeycomb") {
    const CombinatorialMap m = quiver_to_map(c3_quiver());
    CHECK(m.num_black() == 1);
    CHECK(m.num_white() == 1);
    CHECK(m.num_edges() == 3);
    REQUIRE(m.num_faces() == 1);
    CHECK(m.face_boundary(0).size() == 6);
    CHECK(m.black_nodes()[0].size() == 3);
    CHECK(genus(m) == 1);
}

TEST_CASE("conifold dualizes to one square pair") {
    const CombinatorialMap m = quiver_to_map(conifold_quiver());
    CHECK(m.num_black() == 1);
    CHECK(m.num_white() == 1);
    CHECK(m.black_nodes()[0].size() == 4);
    CHECK(m.white_nodes()[0].size() == 4);
    CHECK(m.num_edges() == 4);
    CHECK(m.num_faces() == 2);
    CHECK(genus(m) == 1);
}

TEST_CASE("non-toric quiver cannot be dualized") {
    const Quiver q({"1"}, {{"X", "1", "1"}, {"Y", "1", "1"}, {"Z", "1", "1"}}, {term(1, {"X", "Y", "Z"})});
    CHECK_THROWS_AS(quiver_to_map(q), Error);
}

TEST_CASE("honeycomb and square maps dualize back") {
    CHECK(quivers_isomorphic(map_to_quiver(quiver_to_map(c3_quiver())), c3_quiver()));
    const Quiver back = map_to_quiver(quiver_to_map(conifold_quiver()));
    CHECK(back.num_nodes() == 2);
    CHECK(back.num_arrows() == 4);
    CHECK(quivers_isomorphic(back, conifold_quiver()));
}

TEST_CASE("genus-0 map is rejected by the map-to-quiver direction") {
    CHECK_THROWS_AS(map_to_quiver(tf_test::single_edge()), GenusError);
}

TEST_CASE("genus examples") {
    CHECK(genus(CombinatorialMap({"a", "b", "c"}, {{0, 1, 2}}, {{0, 1, 2}})) == 1);
    CHECK(genus(tf_test::single_edge()) == 0);
    const CombinatorialMap f0 = fixture("f0-I").map;
    CHECK(f0.num_black() == 2);
    CHECK(f0.num_white() == 2);
    CHECK(f0.num_edges() == 8);
    CHECK(f0.num_faces() == 4);
    CHECK(genus(f0) == 1);
}

TEST_CASE("round trip and Euler relation on every quiver fixture") {
    for (const auto& name : fixture_names()) {
        const Fixture f = fixture(name);
        CAPTURE(name);
        CHECK(genus(f.map) == 1);
        CHECK(static_cast<long>(f.map.num_faces()) - static_cast<long>(f.map.num_edges()) +
                  static_cast<long>(f.map.num_black() + f.map.num_white()) ==
              0);
        if (f.quiver) CHECK(quivers_isomorphic(map_to_quiver(quiver_to_map(*f.quiver)), *f.quiver));
    }
}

TEST_CASE("isomorphism notices a changed superpotential") {
    Quiver q = c3_quiver();
    const Quiver flipped({"1"}, q.arrows(), {term(1, {"X", "Y", "Z"}), term(1, {"X", "Z", "Y"})});
    CHECK_FALSE(quivers_isomorphic(q, flipped));
    CHECK_FALSE(quivers_isomorphic(conifold_quiver(), c3z3_quiver()));
}

TEST_CASE("honeycomb homology weights under the default tree") {
    const CombinatorialMap m = quiver_to_map(c3_quiver());
    const HomologyWeights h = homology_weights(m);
    CHECK(h[*m.edge_index("X")] == LatticePoint{0, 0});
    CHECK(h[*m.edge_index("Y")] == LatticePoint{1, 0});
    CHECK(h[*m.edge_index("Z")] == LatticePoint{0, 1});
}

TEST_CASE("homology weights are unimodular cocycles on every fixture") {
    for (const auto& name : fixture_names()) {
        const Fixture f = fixture(name);
        CAPTURE(name);
        for (std::uint64_t seed : {0ULL, 1ULL, 77ULL}) {
            const HomologyWeights h = homology_weights(f.map, seed);
            CHECK(is_cocycle(f.map, h));
            CHECK(is_homology_basis(f.map, h));
            for (std::size_t face = 0; face < f.map.num_faces(); ++face)
                CHECK(face_weight_sum(f.map, h, face) == LatticePoint{0, 0});
        }
        if (f.weights) CHECK(is_homology_basis(f.map, *f.weights));
    }
}

TEST_CASE("incidence matrices") {
    const auto clover = incidence_matrix(c3_quiver());
    REQUIRE(clover.size() == 1);
    for (int x : clover[0]) CHECK(x == 0);

    const Quiver con = conifold_quiver();
    const auto d = incidence_matrix(con);
    REQUIRE(d.size() == 2);
    REQUIRE(d[0].size() == 4);
    for (std::size_t a = 0; a < 4; ++a) {
        CHECK(d[0][a] == -d[1][a]);
        CHECK(std::abs(d[0][a]) == 1);
        // arrows into node 1 have the opposite column to those leaving it
        const bool from1 = con.arrows()[a].from == "1";
        CHECK(d[0][a] == (from1 ? -1 : 1));
    }

    const auto z3 = incidence_matrix(c3z3_quiver());
    REQUIRE(z3.size() == 3);
    for (std::size_t a = 0; a < 9; ++a) {
        int plus = 0, minus = 0;
        for (std::size_t v = 0; v < 3; ++v) {
            plus += z3[v][a] == 1;
            minus += z3[v][a] == -1;
        }
        CHECK(plus == 1);
        CHECK(minus == 1);
    }
}

TEST_CASE("quiver JSON round trip") {
    for (const Quiver& q : {c3_quiver(), conifold_quiver(), c3z3_quiver(), f0_phase1_quiver(), f0_phase2_quiver()}) {
        const Json j = quiver_to_json(q);
        const Quiver back = quiver_from_json(parse_json(j.dump()));
        CHECK(quivers_isomorphic(q, back));
        CHECK(quiver_to_json(back) == j);
    }
}

TEST_CASE("map JSON round trip keeps signs and weights") {
    const Fixture f = dp3_fixture();
    const Json j = map_to_json(f.map, f.signs, f.weights);
    const MapDocument d = map_from_json(parse_json(j.dump()));
    CHECK(d.map.edges() == f.map.edges());
    CHECK(d.map.black_nodes() == f.map.black_nodes());
    CHECK(d.map.white_nodes() == f.map.white_nodes());
    REQUIRE(d.signs);
    CHECK(*d.signs == *f.signs);
    REQUIRE(d.weights);
    CHECK(d.weights->per_edge == f.weights->per_edge);
}

TEST_CASE("malformed JSON raises ParseError") {
    CHECK_THROWS_AS(parse_json("{"), ParseError);
    CHECK_THROWS_AS(quiver_from_json(parse_json(R"({"nodes": 3})")), ParseError);
    CHECK_THROWS_AS(map_from_json(parse_json(R"({"edges": ["a"]})")), ParseError);
    CHECK(rational_from_json(parse_json("\"-3/6\"")) == Rational(-1, 2));
    CHECK(rational_to_string(Rational(2)) == "2");
    CHECK(rational_to_string(Rational(-3, 4)) == "-3/4");
}
