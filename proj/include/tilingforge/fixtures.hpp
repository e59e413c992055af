#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tilingforge/combinatorial_map.hpp"
#include "tilingforge/homology.hpp"
#include "tilingforge/kasteleyn.hpp"
#include "tilingforge/quiver.hpp"

namespace tilingforge {

// Reference values a pipeline run is checked against.
struct FixtureExpectations {
    std::optional<std::string> passport;        // Passport::to_string()
    std::optional<std::vector<double>> rcharges;  // per edge of the fixture map
    std::optional<double> J;                    // j / 1728
    std::optional<std::string> determinant;     // up to sign and a monomial
    std::optional<std::string> canonical_boundary;  // ToricDiagram::to_text()
};

struct Fixture {
    std::string name;
    std::optional<Quiver> quiver;  // absent for fixtures stored as maps
    CombinatorialMap map;
    std::optional<EdgeSigns> signs;        // stored Kasteleyn data, if any
    std::optional<HomologyWeights> weights;
    FixtureExpectations expected;
};

// c3, c3z3, conifold, f0-I, f0-II, dp3
const std::vector<std::string>& fixture_names();

// Throws PreconditionError for an unknown name.
Fixture fixture(const std::string& name);

// Individual constructors, also used by tests.
Quiver c3_quiver();
Quiver conifold_quiver();
Quiver c3z3_quiver();
Quiver f0_phase1_quiver();
Quiver f0_phase2_quiver();
Fixture dp3_fixture();

}  // namespace tilingforge
