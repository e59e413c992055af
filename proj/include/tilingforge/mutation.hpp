#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tilingforge/combinatorial_map.hpp"
#include "tilingforge/quiver.hpp"
#include "tilingforge/toric.hpp"

namespace tilingforge {

// Composite arrow created by mutation: `incoming` (u -> v) followed by
// `outgoing` (v -> w) becomes `id` (u -> w).
struct Meson {
    std::string id;
    std::string incoming;
    std::string outgoing;
};

struct MutationRecord {
    std::string node;
    // Ranks before and after (N_c -> N_f - N_c); always 1 -> 1 for toric quivers.
    int rank_before = 1;
    int rank_after = 1;
    std::vector<Meson> mesons;
    // (original id, reversed id) for every arrow at the node.
    std::vector<std::pair<std::string, std::string>> reversed;
    // Arrow pairs integrated out by reduce_mass_terms.
    std::vector<std::pair<std::string, std::string>> removed_pairs;
    std::size_t terms_before = 0;
    std::size_t terms_after = 0;
};

// Id given to an arrow when it is reversed: a trailing prime is toggled, so
// reversing twice restores the original name.
std::string reversed_arrow_id(const std::string& id);

// Id of the meson composed of a then b.
std::string meson_id(const std::string& a, const std::string& b);

// Toric Seiberg duality at node v (2 incoming and 2 outgoing arrows).
// Arrows at v are reversed in place, mesons are appended after the other
// arrows, every a.b pair in a term is replaced by its meson and each meson
// gets a cubic term m.rev(b).rev(a) with the opposite sign. No mass terms are
// integrated out here. Throws NotDualizableError, MultiVisitError,
// PreconditionError (input fails validation) and ToricViolationError.
std::pair<Quiver, MutationRecord> seiberg_mutate(const Quiver& q, const std::string& v);

// Integrates out 2-cycle terms c0 X Y: with t_X = c1 X A and t_Y = c2 Y B,
// Y is replaced by A in t_Y (new coefficient -c1 c2 / c0), and X, Y, the
// 2-cycle and t_X are deleted. Repeats until no 2-cycle term remains.
// Throws SpliceError when the surrounding terms do not fit together.
Quiver reduce_mass_terms(const Quiver& q);
Quiver reduce_mass_terms(const Quiver& q, std::vector<std::pair<std::string, std::string>>& removed);

// seiberg_mutate followed by reduce_mass_terms, filling removed_pairs and
// terms_after in the record.
std::pair<Quiver, MutationRecord> mutate_and_reduce(const Quiver& q, const std::string& v);

struct UrbanRenewal {
    CombinatorialMap map;
    std::size_t face = 0;  // the renewed face in the new map
    MutationRecord record;
};

// Mutation conjugated to the map side via the dual quiver.
UrbanRenewal urban_renewal(const CombinatorialMap& m, std::size_t face);

struct DualityReport {
    ToricDiagram canonical_first;   // canonical boundary profile of q
    ToricDiagram canonical_second;  // canonical boundary profile of q2
    bool polygons_equal = false;    // lattice polygons agree up to GL(2,Z) + shift
    bool boundary_equal = false;    // ... including boundary multiplicities

    bool equal() const { return polygons_equal && boundary_equal; }
};

// Compares the toric diagrams of the two quivers (through their tilings and
// Kasteleyn determinants) on support polygon and boundary multiplicities.
DualityReport check_duality_invariance(const Quiver& q, const Quiver& q2);

}  // namespace tilingforge
