#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tilingforge/quiver.hpp"

namespace tilingforge {

// perm[i] is the image of i.
using Permutation = std::vector<std::size_t>;

std::vector<std::vector<std::size_t>> cycles_of(const Permutation& perm);
Permutation compose(const Permutation& outer, const Permutation& inner);  // outer(inner(x))
Permutation inverse(const Permutation& perm);

// A bipartite map on an oriented surface. Every edge joins one black and one
// white node; a node is a cycle listing its edges in clockwise order. The
// rotation systems sigma_black and sigma_white send an edge to its clockwise
// successor around its black (resp. white) endpoint.
//
// Faces are the cycles of phi = sigma_white . sigma_black. The face cycle
// through e lists the edges x whose clockwise corner (x, sigma_black(x)) at a
// black node belongs to that face, so a face of phi-length k has 2k sides.
class CombinatorialMap {
public:
    CombinatorialMap() = default;
    CombinatorialMap(std::vector<std::string> edges,
                     std::vector<std::vector<std::size_t>> black_nodes,
                     std::vector<std::vector<std::size_t>> white_nodes);

    static CombinatorialMap from_cycles(std::vector<std::string> edges,
                                        const std::vector<std::vector<std::string>>& black_nodes,
                                        const std::vector<std::vector<std::string>>& white_nodes);

    std::size_t num_edges() const { return edges_.size(); }
    std::size_t num_black() const { return black_nodes_.size(); }
    std::size_t num_white() const { return white_nodes_.size(); }
    std::size_t num_faces() const { return faces_.size(); }

    const std::vector<std::string>& edges() const { return edges_; }
    const std::vector<std::vector<std::size_t>>& black_nodes() const { return black_nodes_; }
    const std::vector<std::vector<std::size_t>>& white_nodes() const { return white_nodes_; }
    const std::vector<std::vector<std::size_t>>& faces() const { return faces_; }

    const Permutation& sigma_black() const { return sigma_black_; }
    const Permutation& sigma_white() const { return sigma_white_; }
    const Permutation& face_permutation() const { return phi_; }

    std::size_t black_of(std::size_t edge) const { return black_of_[edge]; }
    std::size_t white_of(std::size_t edge) const { return white_of_[edge]; }
    std::size_t face_of(std::size_t edge) const { return face_of_[edge]; }
    // Face lying on the other side of `edge`: the face of sigma_black^{-1}(edge).
    std::size_t left_face_of(std::size_t edge) const { return face_of_[sigma_black_inv_[edge]]; }

    // Side sequence of a face: x0, sigma_black(x0), x1, sigma_black(x1), ...
    // An edge bounding the face twice appears twice.
    std::vector<std::size_t> face_boundary(std::size_t face) const;

    std::optional<std::size_t> edge_index(std::string_view id) const;

    // Transitivity of <sigma_black, sigma_white> on edges.
    bool connected() const;

private:
    std::vector<std::string> edges_;
    std::vector<std::vector<std::size_t>> black_nodes_, white_nodes_, faces_;
    Permutation sigma_black_, sigma_white_, sigma_black_inv_, phi_;
    std::vector<std::size_t> black_of_, white_of_, face_of_;
    std::unordered_map<std::string, std::size_t> edge_lookup_;
};

// 2 - 2g = V - E + F. Throws DisconnectedError.
int genus(const CombinatorialMap& m);

// Brane-tiling construction: one black node per +term (clockwise word), one
// white node per -term (reversed word), one edge per arrow. Faces come out in
// bijection with quiver nodes. Throws PreconditionError if the quiver fails
// the toric or cycle checks, GenusError if the map is not a torus, and
// FaceMismatchError if faces and nodes disagree.
CombinatorialMap quiver_to_map(const Quiver& q);

// Dual quiver: node "k" is face k-1 (faces in map order, 1-based names), arrow
// per edge from left_face_of(e) to face_of(e), + terms from black nodes and -
// terms (counter-clockwise words) from white nodes. Throws GenusError.
Quiver map_to_quiver(const CombinatorialMap& m);

// Face of a map built by quiver_to_map(q) that corresponds to quiver node
// `node` (the face containing any arrow into it).
std::size_t face_for_node(const Quiver& q, const CombinatorialMap& m, std::string_view node);

}  // namespace tilingforge
