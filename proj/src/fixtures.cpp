#include "tilingforge/fixtures.hpp"

#include <array>

#include "tilingforge/error.hpp"

namespace tilingforge {

namespace {

Term term(int sign, std::vector<std::string> word) {
    Term t;
    t.sign = sign;
    t.word = std::move(word);
    return t;
}

int eps(int i, int j) { return i == j ? 0 : (i < j ? 1 : -1); }

std::string idx(const std::string& base, int i) { return base + "_" + std::to_string(i); }

}  // namespace

Quiver c3_quiver() {
    return Quiver({"1"}, {{"X", "1", "1"}, {"Y", "1", "1"}, {"Z", "1", "1"}},
                  {term(1, {"X", "Y", "Z"}), term(-1, {"X", "Z", "Y"})});
}

Quiver conifold_quiver() {
    return Quiver({"1", "2"}, {{"A1", "1", "2"}, {"A2", "1", "2"}, {"B1", "2", "1"}, {"B2", "2", "1"}},
                  {term(1, {"A1", "B1", "A2", "B2"}), term(-1, {"A1", "B2", "A2", "B1"})});
}

Quiver c3z3_quiver() {
    std::vector<Arrow> arrows;
    for (int a = 1; a <= 3; ++a) arrows.push_back({idx("X12", a), "1", "2"});
    for (int a = 1; a <= 3; ++a) arrows.push_back({idx("X23", a), "2", "3"});
    for (int a = 1; a <= 3; ++a) arrows.push_back({idx("X31", a), "3", "1"});
    std::vector<Term> terms;
    const std::array<std::array<int, 3>, 6> perms = {{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}, {1, 3, 2}, {3, 2, 1}, {2, 1, 3}}};
    for (std::size_t k = 0; k < perms.size(); ++k) {
        const auto& p = perms[k];
        terms.push_back(term(k < 3 ? 1 : -1, {idx("X12", p[0]), idx("X23", p[1]), idx("X31", p[2])}));
    }
    return Quiver({"1", "2", "3"}, std::move(arrows), std::move(terms));
}

Quiver f0_phase1_quiver() {
    std::vector<Arrow> arrows;
    for (int i = 1; i <= 2; ++i) arrows.push_back({idx("X12", i), "1", "2"});
    for (int i = 1; i <= 2; ++i) arrows.push_back({idx("X23", i), "2", "3"});
    for (int i = 1; i <= 2; ++i) arrows.push_back({idx("X34", i), "3", "4"});
    for (int i = 1; i <= 2; ++i) arrows.push_back({idx("X41", i), "4", "1"});
    // eps_ij eps_kl X12^i X23^k X34^j X41^l
    std::vector<Term> terms;
    for (int i = 1; i <= 2; ++i)
        for (int k = 1; k <= 2; ++k) {
            const int j = 3 - i, l = 3 - k;
            terms.push_back(term(eps(i, j) * eps(k, l), {idx("X12", i), idx("X23", k), idx("X34", j), idx("X41", l)}));
        }
    return Quiver({"1", "2", "3", "4"}, std::move(arrows), std::move(terms));
}

Quiver f0_phase2_quiver() {
    std::vector<Arrow> arrows;
    for (int i = 1; i <= 2; ++i) arrows.push_back({idx("X23", i), "2", "3"});
    for (int i = 1; i <= 2; ++i) arrows.push_back({idx("X34", i), "3", "4"});
    for (int i = 1; i <= 2; ++i) arrows.push_back({idx("Y21", i), "2", "1"});
    for (int i = 1; i <= 2; ++i) arrows.push_back({idx("Y14", i), "1", "4"});
    for (int j = 1; j <= 2; ++j)
        for (int l = 1; l <= 2; ++l) arrows.push_back({"Y42_" + std::to_string(j) + std::to_string(l), "4", "2"});
    // eps_ij eps_kl (X23^i X34^k Y42^{jl} - Y21^i Y14^k Y42^{lj})
    std::vector<Term> terms;
    for (int i = 1; i <= 2; ++i)
        for (int k = 1; k <= 2; ++k) {
            const int j = 3 - i, l = 3 - k;
            const int s = eps(i, j) * eps(k, l);
            const std::string jl = std::to_string(j) + std::to_string(l);
            const std::string lj = std::to_string(l) + std::to_string(j);
            terms.push_back(term(s, {idx("X23", i), idx("X34", k), "Y42_" + jl}));
            terms.push_back(term(-s, {idx("Y21", i), idx("Y14", k), "Y42_" + lj}));
        }
    return Quiver({"1", "2", "3", "4"}, std::move(arrows), std::move(terms));
}

Fixture dp3_fixture() {
    // Edges as white-black pairs; a trailing letter separates parallel edges.
    std::vector<std::string> edges = {"w1b2a", "w1b2b", "w1b4a", "w1b4b", "w1b6a", "w1b6b",
                                      "w3b2",  "w3b4",  "w3b6",  "w5b2",  "w5b4",  "w5b6"};
    std::vector<std::vector<std::size_t>> black = {{0, 6, 1, 9}, {2, 10, 3, 7}, {4, 8, 5, 11}};
    std::vector<std::vector<std::size_t>> white = {{0, 5, 3, 1, 4, 2}, {6, 7, 8}, {9, 10, 11}};
    Fixture f;
    f.name = "dp3";
    f.map = CombinatorialMap(edges, black, white);
    f.signs = EdgeSigns{1, 1, 1, -1, 1, 1, 1, -1, -1, -1, -1, 1};
    f.weights = HomologyWeights{{{0, 0}, {0, 1}, {0, 0}, {1, 1}, {0, 0}, {1, 0},
                                 {0, 0}, {0, 0}, {0, -1}, {-1, 0}, {0, 0}, {0, 0}}};
    f.expected.determinant = "z^-1w^-1 - w^-1 - z^-1 - 6 - z - w + zw";
    f.expected.passport = "[4,4,4|3,3,6|2,2,2,2,2,2]";
    return f;
}

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {"c3", "c3z3", "conifold", "f0-I", "f0-II", "dp3"};
    return names;
}

Fixture fixture(const std::string& name) {
    if (name == "dp3") return dp3_fixture();
    Fixture f;
    f.name = name;
    if (name == "c3") {
        f.quiver = c3_quiver();
        f.expected.passport = "[3|3|3]";
        f.expected.rcharges = std::vector<double>(3, 2.0 / 3.0);
        f.expected.J = 0.0;
        f.expected.canonical_boundary = "0 0 1\n0 1 1\n1 0 1\n";
    } else if (name == "conifold") {
        f.quiver = conifold_quiver();
        f.expected.passport = "[4|4|2,2]";
        f.expected.rcharges = std::vector<double>(4, 0.5);
        f.expected.J = 1.0;
    } else if (name == "c3z3") {
        f.quiver = c3z3_quiver();
        f.expected.passport = "[3,3,3|3,3,3|3,3,3]";
        f.expected.rcharges = std::vector<double>(9, 2.0 / 3.0);
        f.expected.J = 0.0;
    } else if (name == "f0-I") {
        f.quiver = f0_phase1_quiver();
        f.expected.passport = "[4,4|4,4|2,2,2,2]";
        f.expected.rcharges = std::vector<double>(8, 0.5);
        f.expected.J = 1.0;
    } else if (name == "f0-II") {
        f.quiver = f0_phase2_quiver();
        f.expected.passport = "[3,3,3,3|3,3,3,3|2,2,4,4]";
        std::vector<double> r(12, 0.5);
        for (std::size_t k = 8; k < 12; ++k) r[k] = 1.0;  // the four Y42 arrows
        f.expected.rcharges = r;
        f.expected.J = 1.0;
    } else {
        throw PreconditionError("unknown fixture '" + name + "'");
    }
    f.map = quiver_to_map(*f.quiver);
    return f;
}

}  // namespace tilingforge
