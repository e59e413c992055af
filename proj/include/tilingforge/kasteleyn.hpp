#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tilingforge/combinatorial_map.hpp"
#include "tilingforge/homology.hpp"
#include "tilingforge/laurent.hpp"
#include "tilingforge/toric.hpp"

namespace tilingforge {

// One sign (+1 / -1) per edge.
using EdgeSigns = std::vector<int>;

// Solves the face parity system over GF(2): for a face with E = 2k sides the
// product of signs over its side incidences must be +1 when E = 2 mod 4 and
// -1 when E = 0 mod 4. Free variables are set to +1. Throws NoSolutionError
// when the system is inconsistent and GenusError for non-tori.
EdgeSigns kasteleyn_signs(const CombinatorialMap& m);

// Same system, free variables drawn from a seeded generator.
EdgeSigns kasteleyn_signs(const CombinatorialMap& m, std::uint64_t free_seed);

bool satisfies_kasteleyn_condition(const CombinatorialMap& m, const EdgeSigns& signs);

// Rows are white nodes and columns black nodes, in map order.
struct KasteleynMatrix {
    std::vector<std::vector<LaurentPoly2>> entries;

    std::size_t rows() const { return entries.size(); }
    std::size_t cols() const { return entries.empty() ? 0 : entries.front().size(); }
};

// K(white, black) = sum over joining edges of sign(e) z^{h_z(e)} w^{h_w(e)}.
// Throws DimensionError if #black != #white or the map is empty.
KasteleynMatrix kasteleyn_matrix(const CombinatorialMap& m, const EdgeSigns& signs, const HomologyWeights& h);

// Exact determinant by Laplace expansion along rows, memoized on the set of
// used columns (2^n states). Throws DimensionError for non-square input.
LaurentPoly2 laurent_det(const KasteleynMatrix& k);

// kasteleyn_signs + homology_weights + kasteleyn_matrix + laurent_det.
LaurentPoly2 kasteleyn_determinant(const CombinatorialMap& m);

// toric_diagram(kasteleyn_determinant(m)).
ToricDiagram toric_diagram_of(const CombinatorialMap& m);

struct PerfectMatching {
    std::vector<std::size_t> edges;  // edges[b] = edge used at black node b
    LatticePoint point;              // sum of weights minus the reference's
};

struct MatchingSet {
    std::vector<PerfectMatching> matchings;
    LatticePoint reference_height;  // absolute weight sum of the reference matching

    // Multiplicity per relative lattice point.
    ToricDiagram multiplicities() const;
};

// Exhaustive recursion over black nodes in order, trying edges in index
// order; points are relative to `reference` (or the first matching found).
// Throws NoMatchingError when the graph has no perfect matching, and
// DimensionError when #black != #white.
MatchingSet enumerate_matchings(const CombinatorialMap& m, const HomologyWeights& h,
                                const std::optional<std::vector<std::size_t>>& reference = std::nullopt);

}  // namespace tilingforge
