#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "tilingforge/combinatorial_map.hpp"
#include "tilingforge/homology.hpp"
#include "tilingforge/kasteleyn.hpp"
#include "tilingforge/quiver.hpp"

namespace tilingforge {

using Json = nlohmann::ordered_json;

// {"nodes": [...], "arrows": [{"id","from","to"}],
//  "W": [{"sign": 1|-1, "coeff": "p/q", "word": [...]}]}
Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

// A map plus the optional Kasteleyn data it may carry.
struct MapDocument {
    CombinatorialMap map;
    std::optional<EdgeSigns> signs;
    std::optional<HomologyWeights> weights;
};

// {"edges": [...], "sigma_black": [[...]], "sigma_white": [[...]],
//  optional "signs": [1, -1, ...], optional "weights": [[hz, hw], ...]}
Json map_to_json(const CombinatorialMap& m, const std::optional<EdgeSigns>& signs = std::nullopt,
                 const std::optional<HomologyWeights>& weights = std::nullopt);
MapDocument map_from_json(const Json& j);

// Parses text; ParseError carries the parser message.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

// "p/q" or "p"; integers given as JSON numbers are accepted too.
Rational rational_from_json(const Json& j);
std::string rational_to_string(const Rational& r);

}  // namespace tilingforge
