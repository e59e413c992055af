#include "tilingforge/combinatorial_map.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "tilingforge/error.hpp"

namespace tilingforge {

std::vector<std::vector<std::size_t>> cycles_of(const Permutation& perm) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> cycle;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            cycle.push_back(j);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
    Permutation out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
    return out;
}

Permutation inverse(const Permutation& perm) {
    Permutation out(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) out[perm[i]] = i;
    return out;
}

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

void fill_rotation(const std::vector<std::vector<std::size_t>>& nodes, std::size_t n, Permutation& sigma,
                   std::vector<std::size_t>& owner, const char* colour) {
    sigma.assign(n, npos);
    owner.assign(n, npos);
    for (std::size_t v = 0; v < nodes.size(); ++v) {
        const auto& cyc = nodes[v];
        if (cyc.empty()) throw MalformedError(std::string(colour) + " node with no edges");
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const std::size_t e = cyc[i];
            if (e >= n) throw MalformedError(std::string(colour) + " node references unknown edge");
            if (owner[e] != npos)
                throw MalformedError("edge " + std::to_string(e) + " appears twice among " + colour + " nodes");
            owner[e] = v;
            sigma[e] = cyc[(i + 1) % cyc.size()];
        }
    }
    for (std::size_t e = 0; e < n; ++e) {
        if (owner[e] == npos)
            throw MalformedError("edge " + std::to_string(e) + " has no " + colour + " endpoint");
    }
}

}  // namespace

CombinatorialMap::CombinatorialMap(std::vector<std::string> edges,
                                   std::vector<std::vector<std::size_t>> black_nodes,
                                   std::vector<std::vector<std::size_t>> white_nodes)
    : edges_(std::move(edges)), black_nodes_(std::move(black_nodes)), white_nodes_(std::move(white_nodes)) {
    const std::size_t n = edges_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!edge_lookup_.emplace(edges_[i], i).second)
            throw MalformedError("duplicate edge id '" + edges_[i] + "'");
    }
    fill_rotation(black_nodes_, n, sigma_black_, black_of_, "black");
    fill_rotation(white_nodes_, n, sigma_white_, white_of_, "white");
    sigma_black_inv_ = inverse(sigma_black_);
    phi_ = compose(sigma_white_, sigma_black_);
    faces_ = cycles_of(phi_);
    face_of_.assign(n, npos);
    for (std::size_t f = 0; f < faces_.size(); ++f)
        for (auto e : faces_[f]) face_of_[e] = f;
}

CombinatorialMap CombinatorialMap::from_cycles(std::vector<std::string> edges,
                                               const std::vector<std::vector<std::string>>& black_nodes,
                                               const std::vector<std::vector<std::string>>& white_nodes) {
    std::unordered_map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < edges.size(); ++i) idx.emplace(edges[i], i);
    auto convert = [&](const std::vector<std::vector<std::string>>& nodes) {
        std::vector<std::vector<std::size_t>> out;
        for (const auto& cyc : nodes) {
            std::vector<std::size_t> c;
            for (const auto& id : cyc) {
                auto it = idx.find(id);
                if (it == idx.end()) throw MalformedError("rotation references unknown edge '" + id + "'");
                c.push_back(it->second);
            }
            out.push_back(std::move(c));
        }
        return out;
    };
    return CombinatorialMap(std::move(edges), convert(black_nodes), convert(white_nodes));
}

std::vector<std::size_t> CombinatorialMap::face_boundary(std::size_t face) const {
    std::vector<std::size_t> sides;
    for (auto x : faces_.at(face)) {
        sides.push_back(x);
        sides.push_back(sigma_black_[x]);
    }
    return sides;
}

std::optional<std::size_t> CombinatorialMap::edge_index(std::string_view id) const {
    auto it = edge_lookup_.find(std::string(id));
    if (it == edge_lookup_.end()) return std::nullopt;
    return it->second;
}

bool CombinatorialMap::connected() const {
    const std::size_t n = num_edges();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> todo;
    todo.push(0);
    seen[0] = true;
    std::size_t count = 1;
    while (!todo.empty()) {
        auto e = todo.front();
        todo.pop();
        for (auto next : {sigma_black_[e], sigma_white_[e]}) {
            if (!seen[next]) {
                seen[next] = true;
                ++count;
                todo.push(next);
            }
        }
    }
    return count == n;
}

int genus(const CombinatorialMap& m) {
    if (!m.connected()) throw DisconnectedError("map is not connected");
    const long long chi = static_cast<long long>(m.num_black() + m.num_white()) -
                          static_cast<long long>(m.num_edges()) + static_cast<long long>(m.num_faces());
    if ((2 - chi) % 2 != 0) throw MalformedError("odd Euler characteristic");
    return static_cast<int>((2 - chi) / 2);
}

CombinatorialMap quiver_to_map(const Quiver& q) {
    auto report = validate_quiver(q);
    if (!report.toric || !report.cycles) {
        std::string why = "quiver fails the toric/cycle checks";
        if (!report.diagnostics.empty()) why += ": " + report.diagnostics.front();
        throw PreconditionError(why);
    }
    std::vector<std::string> edges;
    for (const auto& a : q.arrows()) edges.push_back(a.id);
    std::vector<std::vector<std::size_t>> black, white;
    for (const auto& t : q.terms()) {
        std::vector<std::size_t> cyc;
        for (const auto& id : t.word) cyc.push_back(*q.arrow_index(id));
        if (t.sign > 0) {
            black.push_back(std::move(cyc));
        } else {
            std::reverse(cyc.begin(), cyc.end());
            white.push_back(std::move(cyc));
        }
    }
    CombinatorialMap m(std::move(edges), std::move(black), std::move(white));

    int g = 0;
    try {
        g = genus(m);
    } catch (const DisconnectedError&) {
        throw GenusError("tiling is disconnected");
    }
    if (g != 1) throw GenusError("tiling has genus " + std::to_string(g) + ", expected 1");
    if (m.num_faces() != q.num_nodes())
        throw FaceMismatchError("tiling has " + std::to_string(m.num_faces()) + " faces but the quiver has " +
                                std::to_string(q.num_nodes()) + " nodes");
    std::set<std::string> targets;
    for (const auto& face : m.faces()) {
        const std::string& node = q.arrows()[face.front()].to;
        for (auto e : face) {
            if (q.arrows()[e].to != node) throw FaceMismatchError("face mixes arrows into different nodes");
        }
        targets.insert(node);
    }
    if (targets.size() != q.num_nodes()) throw FaceMismatchError("faces do not cover every quiver node");
    return m;
}

Quiver map_to_quiver(const CombinatorialMap& m) {
    int g = genus(m);
    if (g != 1) throw GenusError("map has genus " + std::to_string(g) + ", expected 1");
    std::vector<std::string> nodes;
    for (std::size_t f = 0; f < m.num_faces(); ++f) nodes.push_back(std::to_string(f + 1));
    std::vector<Arrow> arrows;
    for (std::size_t e = 0; e < m.num_edges(); ++e)
        arrows.push_back({m.edges()[e], nodes[m.left_face_of(e)], nodes[m.face_of(e)]});
    std::vector<Term> terms;
    for (const auto& cyc : m.black_nodes()) {
        Term t;
        for (auto e : cyc) t.word.push_back(m.edges()[e]);
        terms.push_back(std::move(t));
    }
    for (const auto& cyc : m.white_nodes()) {
        Term t;
        t.sign = -1;
        for (auto it = cyc.rbegin(); it != cyc.rend(); ++it) t.word.push_back(m.edges()[*it]);
        terms.push_back(std::move(t));
    }
    return Quiver(std::move(nodes), std::move(arrows), std::move(terms));
}

std::size_t face_for_node(const Quiver& q, const CombinatorialMap& m, std::string_view node) {
    for (const auto& a : q.arrows()) {
        if (a.to == node) {
            auto e = m.edge_index(a.id);
            if (!e) throw MalformedError("map does not contain arrow '" + a.id + "'");
            return m.face_of(*e);
        }
    }
    throw PreconditionError("node '" + std::string(node) + "' has no incoming arrows");
}

}  // namespace tilingforge
