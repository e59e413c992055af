#pragma once

#include <string>
#include <vector>

#include "tilingforge/combinatorial_map.hpp"

namespace tilingforge {

// sigma_black . sigma_white . sigma_infinity = id on the edges 0..d-1.
struct PermutationTriple {
    Permutation sigma_black;
    Permutation sigma_white;
    Permutation sigma_infinity;

    std::size_t degree() const { return sigma_black.size(); }
};

// Cycle types, each sorted ascending.
struct Passport {
    std::vector<std::size_t> black;
    std::vector<std::size_t> white;
    std::vector<std::size_t> infinity;

    // "[3,3|3,3|2,4]"
    std::string to_string() const;
    friend bool operator==(const Passport&, const Passport&) = default;
};

// Throws DisconnectedError.
PermutationTriple permutation_triple(const CombinatorialMap& m);

// Throws PreconditionError if the three permutations do not compose to the
// identity or act intransitively.
void check_triple(const PermutationTriple& t);

Passport passport(const PermutationTriple& t);

// 2g - 2 = d - (B + W + I). Throws NonIntegerGenusError.
int rh_genus(const PermutationTriple& t);

// Cycle notation on the labels 1..d, fixed points included: "(1 2 3)(4)".
std::string cycle_notation(const Permutation& p);

}  // namespace tilingforge
