#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

namespace tilingforge {

using Rational = mpq_class;

struct Arrow {
    std::string id;
    std::string from;
    std::string to;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

// One monomial of the superpotential: sign * coeff * (cyclic word of arrows).
// The word is stored with an explicit starting arrow; equality is up to
// rotation only (reflection changes the bipartite colouring).
struct Term {
    int sign = 1;
    Rational coeff{1};
    std::vector<std::string> word;

    bool cyclically_equal(const Term& other) const;
};

// Returns the lexicographically smallest rotation of `word`.
std::vector<std::string> canonical_rotation(const std::vector<std::string>& word);

// A quiver with superpotential and all-ones dimension vector.
//
// Construction enforces structural well-formedness (declared endpoints,
// unique ids, nonzero coefficients, words over known arrows) and throws
// MalformedError otherwise. Whether words close into cycles and whether W
// satisfies the toric condition are diagnosed by validate_quiver instead.
class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> nodes, std::vector<Arrow> arrows, std::vector<Term> terms);

    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<Term>& terms() const { return terms_; }

    std::size_t num_nodes() const { return nodes_.size(); }
    std::size_t num_arrows() const { return arrows_.size(); }
    std::size_t num_terms() const { return terms_.size(); }

    std::optional<std::size_t> arrow_index(std::string_view id) const;
    std::optional<std::size_t> node_index(std::string_view id) const;
    const Arrow& arrow(std::string_view id) const;

private:
    std::vector<std::string> nodes_;
    std::vector<Arrow> arrows_;
    std::vector<Term> terms_;
    std::unordered_map<std::string, std::size_t> arrow_lookup_;
    std::unordered_map<std::string, std::size_t> node_lookup_;
};

struct ValidationReport {
    bool toric = false;
    bool euler = false;
    bool cycles = false;
    std::size_t n0 = 0;
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::vector<std::string> diagnostics;

    bool ok() const { return toric && euler && cycles; }
};

ValidationReport validate_quiver(const Quiver& q);

// d[node][arrow]: -1 at the source row, +1 at the target row. Loops give a
// zero column.
std::vector<std::vector<int>> incidence_matrix(const Quiver& q);

// Graph isomorphism respecting arrow directions and the superpotential
// (signs, coefficients and cyclic words). Backtracking; exponential in the
// worst case, which is fine for quivers of a dozen or so arrows.
bool quivers_isomorphic(const Quiver& a, const Quiver& b);

}  // namespace tilingforge
