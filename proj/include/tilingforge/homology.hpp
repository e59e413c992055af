#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tilingforge/combinatorial_map.hpp"
#include "tilingforge/lattice.hpp"

namespace tilingforge {

// Per-edge pair (h_z, h_w): how often the edge, oriented black -> white,
// crosses the two reference cycles gamma_z and gamma_w. Equivalently two
// integer 1-cocycles whose classes form a basis of H^1(T^2; Z).
struct HomologyWeights {
    std::vector<LatticePoint> per_edge;

    const LatticePoint& operator[](std::size_t e) const { return per_edge[e]; }
    std::size_t size() const { return per_edge.size(); }
};

// Weights that vanish on a BFS spanning tree (rooted at black node 0, edges
// scanned in index order); the two cocycles are the Hermite-normalized
// integer kernel of the face-closure equations on the non-tree edges.
// Throws GenusError unless the map is a torus.
HomologyWeights homology_weights(const CombinatorialMap& m);

// Same construction with a pseudo-random root and edge scan order.
HomologyWeights homology_weights(const CombinatorialMap& m, std::uint64_t tree_seed);

// Signed weight sum around a face (traversal sum of h(sigma_black(x)) - h(x)).
LatticePoint face_weight_sum(const CombinatorialMap& m, const HomologyWeights& h, std::size_t face);

bool is_cocycle(const CombinatorialMap& m, const HomologyWeights& h);

// 2x2 pairing of the two cocycles with a Z-basis of H_1 computed
// independently (cycle space of the graph modulo face boundaries, via Smith
// normal form). |det| == 1 iff the weights descend to a basis.
std::array<std::array<std::int64_t, 2>, 2> period_matrix(const CombinatorialMap& m, const HomologyWeights& h);

bool is_homology_basis(const CombinatorialMap& m, const HomologyWeights& h);

}  // namespace tilingforge
