#include "tilingforge/homology.hpp"

#include <algorithm>
#include <queue>
#include <random>

#include "tilingforge/error.hpp"
#include "tilingforge/int_linalg.hpp"

namespace tilingforge {

namespace {

void require_torus(const CombinatorialMap& m) {
    const int g = genus(m);
    if (g != 1) throw GenusError("homology weights need a genus-1 map, got genus " + std::to_string(g));
}

// Graph vertices: black nodes 0..nb-1, then white nodes nb..nb+nw-1.
std::vector<bool> spanning_tree(const CombinatorialMap& m, std::size_t root,
                                const std::vector<std::vector<std::size_t>>& adjacency) {
    const std::size_t nb = m.num_black();
    std::vector<bool> in_tree(m.num_edges(), false);
    std::vector<bool> seen(nb + m.num_white(), false);
    std::queue<std::size_t> todo;
    todo.push(root);
    seen[root] = true;
    while (!todo.empty()) {
        const std::size_t v = todo.front();
        todo.pop();
        for (auto e : adjacency[v]) {
            const std::size_t other = v < nb ? nb + m.white_of(e) : m.black_of(e);
            if (seen[other]) continue;
            seen[other] = true;
            in_tree[e] = true;
            todo.push(other);
        }
    }
    return in_tree;
}

std::vector<std::vector<std::size_t>> adjacency_of(const CombinatorialMap& m) {
    const std::size_t nb = m.num_black();
    std::vector<std::vector<std::size_t>> adj(nb + m.num_white());
    for (std::size_t e = 0; e < m.num_edges(); ++e) {
        adj[m.black_of(e)].push_back(e);
        adj[nb + m.white_of(e)].push_back(e);
    }
    return adj;
}

HomologyWeights weights_from_tree(const CombinatorialMap& m, const std::vector<bool>& in_tree) {
    std::vector<std::size_t> free_edges;
    std::vector<std::size_t> column(m.num_edges(), static_cast<std::size_t>(-1));
    for (std::size_t e = 0; e < m.num_edges(); ++e) {
        if (!in_tree[e]) {
            column[e] = free_edges.size();
            free_edges.push_back(e);
        }
    }
    IntMatrix closure(m.num_faces(), free_edges.size());
    const auto& sb = m.sigma_black();
    for (std::size_t f = 0; f < m.num_faces(); ++f) {
        for (auto x : m.faces()[f]) {
            if (!in_tree[sb[x]]) closure(f, column[sb[x]]) += 1;
            if (!in_tree[x]) closure(f, column[x]) -= 1;
        }
    }
    const IntMatrix kernel = integer_kernel(closure);
    if (kernel.cols() != 2) throw GenusError("cocycle lattice has rank " + std::to_string(kernel.cols()));
    IntMatrix rows(2, free_edges.size());
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < free_edges.size(); ++j) rows(i, j) = kernel(j, i);
    const IntMatrix basis = hermite_rows(rows);

    HomologyWeights h;
    h.per_edge.assign(m.num_edges(), LatticePoint{});
    for (std::size_t j = 0; j < free_edges.size(); ++j)
        h.per_edge[free_edges[j]] = {basis(0, j).get_si(), basis(1, j).get_si()};
    return h;
}

}  // namespace

HomologyWeights homology_weights(const CombinatorialMap& m) {
    require_torus(m);
    return weights_from_tree(m, spanning_tree(m, 0, adjacency_of(m)));
}

HomologyWeights homology_weights(const CombinatorialMap& m, std::uint64_t tree_seed) {
    require_torus(m);
    std::mt19937_64 rng(tree_seed);
    auto adj = adjacency_of(m);
    for (auto& list : adj) std::shuffle(list.begin(), list.end(), rng);
    std::uniform_int_distribution<std::size_t> pick(0, adj.size() - 1);
    return weights_from_tree(m, spanning_tree(m, pick(rng), adj));
}

LatticePoint face_weight_sum(const CombinatorialMap& m, const HomologyWeights& h, std::size_t face) {
    LatticePoint sum;
    for (auto x : m.faces().at(face)) {
        sum += h[m.sigma_black()[x]];
        sum -= h[x];
    }
    return sum;
}

bool is_cocycle(const CombinatorialMap& m, const HomologyWeights& h) {
    if (h.size() != m.num_edges()) return false;
    for (std::size_t f = 0; f < m.num_faces(); ++f)
        if (face_weight_sum(m, h, f) != LatticePoint{}) return false;
    return true;
}

std::array<std::array<std::int64_t, 2>, 2> period_matrix(const CombinatorialMap& m, const HomologyWeights& h) {
    require_torus(m);
    const std::size_t ne = m.num_edges(), nb = m.num_black(), nv = nb + m.num_white();

    IntMatrix boundary(nv, ne);
    for (std::size_t e = 0; e < ne; ++e) {
        boundary(m.black_of(e), e) -= 1;
        boundary(nb + m.white_of(e), e) += 1;
    }
    const ColumnEchelon ce = column_echelon(boundary);
    const std::size_t cycle_rank = ne - ce.rank;

    // Face boundary chains in cycle-space coordinates.
    IntMatrix faces(ne, m.num_faces());
    for (std::size_t f = 0; f < m.num_faces(); ++f)
        for (auto x : m.faces()[f]) {
            faces(m.sigma_black()[x], f) += 1;
            faces(x, f) -= 1;
        }
    const IntMatrix coords_all = ce.inverse_transform * faces;
    IntMatrix coords(cycle_rank, m.num_faces());
    for (std::size_t i = 0; i < cycle_rank; ++i)
        for (std::size_t f = 0; f < m.num_faces(); ++f) coords(i, f) = coords_all(ce.rank + i, f);

    const SmithForm snf = smith_normal_form(coords);
    for (std::size_t i = 0; i < snf.rank; ++i)
        if (snf.diagonal(i, i) != 1) throw MalformedError("first homology has torsion");
    if (cycle_rank - snf.rank != 2) throw GenusError("first homology does not have rank 2");

    std::array<std::array<std::int64_t, 2>, 2> p{};
    for (std::size_t j = 0; j < 2; ++j) {
        // gamma_j = kernel basis * left_inverse column (rank + j)
        std::vector<mpz_class> cycle(ne);
        for (std::size_t k = 0; k < cycle_rank; ++k) {
            const mpz_class& c = snf.left_inverse(k, snf.rank + j);
            if (c == 0) continue;
            for (std::size_t e = 0; e < ne; ++e) cycle[e] += c * ce.transform(e, ce.rank + k);
        }
        mpz_class pz = 0, pw = 0;
        for (std::size_t e = 0; e < ne; ++e) {
            pz += cycle[e] * h[e].a;
            pw += cycle[e] * h[e].b;
        }
        p[0][j] = pz.get_si();
        p[1][j] = pw.get_si();
    }
    return p;
}

bool is_homology_basis(const CombinatorialMap& m, const HomologyWeights& h) {
    if (!is_cocycle(m, h)) return false;
    const auto p = period_matrix(m, h);
    const std::int64_t det = p[0][0] * p[1][1] - p[0][1] * p[1][0];
    return det == 1 || det == -1;
}

}  // namespace tilingforge
