#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "tilingforge/fixtures.hpp"
#include "tilingforge/json_io.hpp"

namespace tilingforge {

// Stage names in execution order.
inline constexpr const char* kStages[] = {"validate", "dualize", "kasteleyn", "matchings", "geometry", "dessin", "mutate"};

struct PipelineOptions {
    std::set<std::string> stages;          // empty means every stage except mutate
    std::optional<std::string> mutate_node;  // enables the mutate stage
    bool check_invariance = false;
    std::uint64_t seed = 0x5EED;
    double tolerance = 1e-6;
    std::optional<std::string> out_dir;  // artifacts are written here if set
};

struct PipelineResult {
    Json report;
    std::string summary;
    bool ok = true;
};

// Either a quiver or a map must be present in the fixture; expectations are
// checked when given.
PipelineResult run_pipeline(const Fixture& input, const PipelineOptions& options);

// Reads a quiver or map JSON file (told apart by their keys) into a fixture
// without expectations.
Fixture fixture_from_file(const std::string& path);

// Seed from TILINGFORGE_SEED (decimal or 0x-hex), defaulting to 0x5EED.
// Throws ParseError on a malformed value.
std::uint64_t seed_from_environment();

// Ten significant digits, as used in every report.
std::string format_number(double x);
std::string format_complex(std::complex<double> z);

}  // namespace tilingforge
