#include "tilingforge/kasteleyn.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "tilingforge/error.hpp"

namespace tilingforge {

namespace {

using Bits = std::vector<std::uint8_t>;

EdgeSigns solve_signs(const CombinatorialMap& m, std::mt19937_64* rng) {
    const int g = genus(m);
    if (g != 1) throw GenusError("Kasteleyn signs need a genus-1 map, got genus " + std::to_string(g));
    const std::size_t ne = m.num_edges();
    // Augmented rows: ne coefficient bits followed by the rhs bit.
    std::vector<Bits> rows;
    for (std::size_t f = 0; f < m.num_faces(); ++f) {
        Bits row(ne + 1, 0);
        const auto sides = m.face_boundary(f);
        for (auto e : sides) row[e] ^= 1;
        row[ne] = sides.size() % 4 == 0 ? 1 : 0;
        rows.push_back(std::move(row));
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ne && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p][c]) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && rows[i][c])
                for (std::size_t j = c; j <= ne; ++j) rows[i][j] ^= rows[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][ne]) throw NoSolutionError("face parity system is inconsistent");

    Bits value(ne, 0);
    std::vector<bool> is_pivot(ne, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    if (rng) {
        std::bernoulli_distribution coin(0.5);
        for (std::size_t c = 0; c < ne; ++c)
            if (!is_pivot[c]) value[c] = coin(*rng) ? 1 : 0;
    }
    // Reduced row echelon form: each pivot row determines its pivot variable.
    for (std::size_t i = 0; i < r; ++i) {
        std::uint8_t v = rows[i][ne];
        for (std::size_t c = pivot_col[i] + 1; c < ne; ++c)
            if (rows[i][c] && !is_pivot[c]) v ^= value[c];
        value[pivot_col[i]] = v;
    }
    EdgeSigns signs(ne);
    for (std::size_t e = 0; e < ne; ++e) signs[e] = value[e] ? -1 : 1;
    return signs;
}

}  // namespace

EdgeSigns kasteleyn_signs(const CombinatorialMap& m) { return solve_signs(m, nullptr); }

EdgeSigns kasteleyn_signs(const CombinatorialMap& m, std::uint64_t free_seed) {
    std::mt19937_64 rng(free_seed);
    return solve_signs(m, &rng);
}

bool satisfies_kasteleyn_condition(const CombinatorialMap& m, const EdgeSigns& signs) {
    if (signs.size() != m.num_edges()) return false;
    for (std::size_t f = 0; f < m.num_faces(); ++f) {
        const auto sides = m.face_boundary(f);
        int product = 1;
        for (auto e : sides) product *= signs[e];
        const int expected = sides.size() % 4 == 2 ? 1 : -1;
        if (product != expected) return false;
    }
    return true;
}

KasteleynMatrix kasteleyn_matrix(const CombinatorialMap& m, const EdgeSigns& signs, const HomologyWeights& h) {
    if (m.num_edges() == 0) throw DimensionError("empty map");
    if (m.num_black() != m.num_white())
        throw DimensionError("Kasteleyn matrix needs #black == #white (" + std::to_string(m.num_black()) +
                             " vs " + std::to_string(m.num_white()) + ")");
    if (signs.size() != m.num_edges() || h.size() != m.num_edges())
        throw DimensionError("signs/weights do not match the edge count");
    KasteleynMatrix k;
    k.entries.assign(m.num_white(), std::vector<LaurentPoly2>(m.num_black()));
    for (std::size_t e = 0; e < m.num_edges(); ++e)
        k.entries[m.white_of(e)][m.black_of(e)].add_term(h[e], signs[e]);
    return k;
}

LaurentPoly2 laurent_det(const KasteleynMatrix& k) {
    const std::size_t n = k.rows();
    for (const auto& row : k.entries)
        if (row.size() != n) throw DimensionError("determinant of a non-square matrix");
    if (n == 0) return LaurentPoly2(1);
    if (n > 24) throw DimensionError("matrix too large for exact expansion");
    const std::size_t states = std::size_t{1} << n;
    std::vector<LaurentPoly2> partial(states);
    partial[0] = LaurentPoly2(1);
    for (std::size_t mask = 0; mask + 1 < states; ++mask) {
        if (partial[mask].is_zero()) continue;
        const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
        for (std::size_t c = 0; c < n; ++c) {
            if (mask & (std::size_t{1} << c)) continue;
            const LaurentPoly2& entry = k.entries[row][c];
            if (entry.is_zero()) continue;
            // Each already used column to the right of c is one inversion.
            const bool odd = std::popcount(mask >> (c + 1)) % 2 == 1;
            LaurentPoly2 term = partial[mask] * entry;
            if (odd)
                partial[mask | (std::size_t{1} << c)] -= term;
            else
                partial[mask | (std::size_t{1} << c)] += term;
        }
        partial[mask] = LaurentPoly2();
    }
    return partial[states - 1];
}

LaurentPoly2 kasteleyn_determinant(const CombinatorialMap& m) {
    return laurent_det(kasteleyn_matrix(m, kasteleyn_signs(m), homology_weights(m)));
}

ToricDiagram toric_diagram_of(const CombinatorialMap& m) { return toric_diagram(kasteleyn_determinant(m)); }

ToricDiagram MatchingSet::multiplicities() const {
    ToricDiagram::Points pts;
    for (const auto& pm : matchings) pts[pm.point] += 1;
    return ToricDiagram(std::move(pts));
}

namespace {

class MatchingEnumerator {
public:
    MatchingEnumerator(const CombinatorialMap& m, const HomologyWeights& h) : m_(m), h_(h) {
        incident_.resize(m.num_black());
        for (std::size_t e = 0; e < m.num_edges(); ++e) incident_[m.black_of(e)].push_back(e);
        white_used_.assign(m.num_white(), false);
        current_.resize(m.num_black());
    }

    std::vector<PerfectMatching> run() {
        recurse(0, {});
        return std::move(found_);
    }

private:
    void recurse(std::size_t b, LatticePoint height) {
        if (b == m_.num_black()) {
            found_.push_back({current_, height});
            return;
        }
        for (auto e : incident_[b]) {
            const std::size_t w = m_.white_of(e);
            if (white_used_[w]) continue;
            white_used_[w] = true;
            current_[b] = e;
            recurse(b + 1, height + h_[e]);
            white_used_[w] = false;
        }
    }

    const CombinatorialMap& m_;
    const HomologyWeights& h_;
    std::vector<std::vector<std::size_t>> incident_;
    std::vector<bool> white_used_;
    std::vector<std::size_t> current_;
    std::vector<PerfectMatching> found_;
};

}  // namespace

MatchingSet enumerate_matchings(const CombinatorialMap& m, const HomologyWeights& h,
                                const std::optional<std::vector<std::size_t>>& reference) {
    if (m.num_black() != m.num_white()) throw DimensionError("perfect matchings need #black == #white");
    if (h.size() != m.num_edges()) throw DimensionError("weights do not match the edge count");
    MatchingSet out;
    out.matchings = MatchingEnumerator(m, h).run();
    if (out.matchings.empty()) throw NoMatchingError("the graph has no perfect matching");

    LatticePoint ref;
    if (reference) {
        std::vector<bool> black(m.num_black(), false), white(m.num_white(), false);
        if (reference->size() != m.num_black()) throw PreconditionError("reference matching has the wrong size");
        for (auto e : *reference) {
            if (e >= m.num_edges() || black[m.black_of(e)] || white[m.white_of(e)])
                throw PreconditionError("reference is not a perfect matching");
            black[m.black_of(e)] = white[m.white_of(e)] = true;
            ref += h[e];
        }
    } else {
        ref = out.matchings.front().point;
    }
    out.reference_height = ref;
    for (auto& pm : out.matchings) pm.point -= ref;
    return out;
}

}  // namespace tilingforge
