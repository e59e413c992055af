#include "tilingforge/json_io.hpp"

#include <fstream>
#include <sstream>

#include "tilingforge/error.hpp"

namespace tilingforge {

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw ParseError("coefficient must be a string \"p/q\" or an integer");
    const std::string s = j.get<std::string>();
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string string_of(const Json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

Quiver quiver_from_json_unchecked(const Json& j) {
    std::vector<std::string> nodes;
    for (const auto& n : field(j, "nodes")) nodes.push_back(n.is_string() ? n.get<std::string>() : n.dump());
    std::vector<Arrow> arrows;
    for (const auto& a : field(j, "arrows"))
        arrows.push_back({string_of(field(a, "id"), "arrow id"), string_of(field(a, "from"), "arrow source"),
                          string_of(field(a, "to"), "arrow target")});
    std::vector<Term> terms;
    for (const auto& t : field(j, "W")) {
        Term term;
        const Json& sign = field(t, "sign");
        if (!sign.is_number_integer()) throw ParseError("term sign must be 1 or -1");
        term.sign = sign.get<int>();
        term.coeff = t.contains("coeff") ? rational_from_json(t.at("coeff")) : Rational(1);
        for (const auto& a : field(t, "word")) term.word.push_back(string_of(a, "word entry"));
        terms.push_back(std::move(term));
    }
    return Quiver(std::move(nodes), std::move(arrows), std::move(terms));
}

MapDocument map_from_json_unchecked(const Json& j) {
    std::vector<std::string> edges;
    for (const auto& e : field(j, "edges")) edges.push_back(string_of(e, "edge id"));
    auto cycles = [&](const char* key) {
        std::vector<std::vector<std::string>> out;
        for (const auto& c : field(j, key)) {
            std::vector<std::string> cyc;
            for (const auto& e : c) cyc.push_back(string_of(e, "cycle entry"));
            out.push_back(std::move(cyc));
        }
        return out;
    };
    MapDocument doc{CombinatorialMap::from_cycles(edges, cycles("sigma_black"), cycles("sigma_white")), {}, {}};
    const std::size_t n = doc.map.num_edges();
    if (j.contains("signs")) {
        EdgeSigns s;
        for (const auto& v : j.at("signs")) {
            if (!v.is_number_integer() || (v.get<int>() != 1 && v.get<int>() != -1))
                throw ParseError("signs must be 1 or -1");
            s.push_back(v.get<int>());
        }
        if (s.size() != n) throw ParseError("need one sign per edge");
        doc.signs = std::move(s);
    }
    if (j.contains("weights")) {
        HomologyWeights h;
        for (const auto& v : j.at("weights")) {
            if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
                throw ParseError("weights must be [hz, hw] integer pairs");
            h.per_edge.push_back({v[0].get<std::int64_t>(), v[1].get<std::int64_t>()});
        }
        if (h.size() != n) throw ParseError("need one weight pair per edge");
        doc.weights = std::move(h);
    }
    return doc;
}

}  // namespace

Json quiver_to_json(const Quiver& q) {
    Json j;
    j["nodes"] = q.nodes();
    Json arrows = Json::array();
    for (const auto& a : q.arrows()) arrows.push_back({{"id", a.id}, {"from", a.from}, {"to", a.to}});
    j["arrows"] = std::move(arrows);
    Json w = Json::array();
    for (const auto& t : q.terms())
        w.push_back({{"sign", t.sign}, {"coeff", rational_to_string(t.coeff)}, {"word", t.word}});
    j["W"] = std::move(w);
    return j;
}

Json map_to_json(const CombinatorialMap& m, const std::optional<EdgeSigns>& signs,
                 const std::optional<HomologyWeights>& weights) {
    auto named = [&](const std::vector<std::vector<std::size_t>>& cycles) {
        Json out = Json::array();
        for (const auto& c : cycles) {
            Json cyc = Json::array();
            for (auto e : c) cyc.push_back(m.edges()[e]);
            out.push_back(std::move(cyc));
        }
        return out;
    };
    Json j;
    j["edges"] = m.edges();
    j["sigma_black"] = named(m.black_nodes());
    j["sigma_white"] = named(m.white_nodes());
    if (signs) j["signs"] = *signs;
    if (weights) {
        Json w = Json::array();
        for (const auto& p : weights->per_edge) w.push_back({p.a, p.b});
        j["weights"] = std::move(w);
    }
    return j;
}

Quiver quiver_from_json(const Json& j) {
    try {
        return quiver_from_json_unchecked(j);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed quiver JSON: ") + e.what());
    }
}

MapDocument map_from_json(const Json& j) {
    try {
        return map_from_json_unchecked(j);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed map JSON: ") + e.what());
    }
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Json read_json_file(const std::string& path) { return parse_json(read_text_file(path)); }

}  // namespace tilingforge
