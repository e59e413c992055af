#pragma once

#include "tilingforge/combinatorial_map.hpp"
#include "tilingforge/fixtures.hpp"
#include "tilingforge/kasteleyn.hpp"

namespace tf_test {

inline tilingforge::Term term(int sign, std::vector<std::string> word) {
    tilingforge::Term t;
    t.sign = sign;
    t.word = std::move(word);
    return t;
}

// One black and one white node joined by a single edge: a sphere.
inline tilingforge::CombinatorialMap single_edge() { return tilingforge::CombinatorialMap({"e"}, {{0}}, {{0}}); }

inline tilingforge::LaurentPoly2 fixture_det(const tilingforge::Fixture& f) {
    using namespace tilingforge;
    const EdgeSigns s = f.signs ? *f.signs : kasteleyn_signs(f.map);
    const HomologyWeights h = f.weights ? *f.weights : homology_weights(f.map);
    return laurent_det(kasteleyn_matrix(f.map, s, h));
}

}  // namespace tf_test
