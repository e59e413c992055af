#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tilingforge/amoeba.hpp"
#include "tilingforge/dessin.hpp"
#include "tilingforge/error.hpp"
#include "tilingforge/fixtures.hpp"
#include "tilingforge/geometry.hpp"
#include "tilingforge/json_io.hpp"
#include "tilingforge/kasteleyn.hpp"
#include "tilingforge/modular.hpp"
#include "tilingforge/mutation.hpp"
#include "tilingforge/pipeline.hpp"
#include "tilingforge/plethystics.hpp"

using namespace tilingforge;

namespace {

struct Globals {
    bool json = false;
    std::string out_dir;
    double tolerance = 1e-6;
};

// Exit status: 0 success, 1 a check failed, 2 a library error.
constexpr int kCheckFailed = 1;
constexpr int kLibraryError = 2;

struct Source {
    std::string path;
    std::string fixture;

    void attach(CLI::App* cmd) {
        cmd->add_option("input", path, "quiver or map JSON file");
        cmd->add_option("--fixture", fixture, "built-in fixture instead of a file")
            ->check(CLI::IsMember(fixture_names()));
    }

    Fixture load() const {
        if (!fixture.empty()) return tilingforge::fixture(fixture);
        if (path.empty()) throw PreconditionError("give an input file or --fixture");
        return fixture_from_file(path);
    }
};

void write_file(const Globals& g, const std::string& name, const std::string& content) {
    if (g.out_dir.empty()) return;
    std::filesystem::create_directories(g.out_dir);
    std::ofstream out(std::filesystem::path(g.out_dir) / name, std::ios::binary);
    out << content;
    if (!out) throw PreconditionError("cannot write " + (std::filesystem::path(g.out_dir) / name).string());
}

void emit(const Globals& g, const Json& j, const std::string& text) {
    if (g.json)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

int cmd_validate(const Globals& g, const Source& src) {
    Json out;
    std::ostringstream text;
    bool ok = true;
    std::optional<Quiver> q;
    std::optional<CombinatorialMap> m;
    if (!src.fixture.empty()) {
        Fixture f = src.load();
        q = f.quiver;
        m = f.map;
    } else {
        if (src.path.empty()) throw PreconditionError("give an input file or --fixture");
        const Json j = read_json_file(src.path);
        if (j.is_object() && j.contains("nodes"))
            q = quiver_from_json(j);
        else
            m = map_from_json(j).map;
    }
    if (!q) {
        q = map_to_quiver(*m);
        out["kind"] = "map";
    } else {
        out["kind"] = "quiver";
    }
    const ValidationReport v = validate_quiver(*q);
    out["N0"] = v.n0;
    out["N1"] = v.n1;
    out["N2"] = v.n2;
    out["cycles"] = v.cycles;
    out["toric"] = v.toric;
    out["euler"] = v.euler;
    out["diagnostics"] = v.diagnostics;
    text << "N0 = " << v.n0 << ", N1 = " << v.n1 << ", N2 = " << v.n2 << '\n';
    text << "closed cycles: " << (v.cycles ? "yes" : "no") << '\n';
    text << "toric condition: " << (v.toric ? "yes" : "no") << '\n';
    text << "Euler relation: " << (v.euler ? "yes" : "no") << '\n';
    for (const auto& d : v.diagnostics) text << "  " << d << '\n';
    ok = v.ok();
    if (ok) {
        try {
            if (!m) m = quiver_to_map(*q);
            out["genus"] = genus(*m);
            text << "tiling genus: " << genus(*m) << '\n';
            ok = genus(*m) == 1;
        } catch (const Error& e) {
            out["tiling_error"] = {{"type", e.name()}, {"message", e.what()}};
            text << "tiling: " << e.name() << ": " << e.what() << '\n';
            ok = false;
        }
    }
    out["ok"] = ok;
    text << (ok ? "valid" : "invalid") << '\n';
    emit(g, out, text.str());
    return ok ? 0 : kCheckFailed;
}

int cmd_dualize(const Globals& g, const Source& src) {
    Json result;
    if (src.fixture.empty() && !src.path.empty()) {
        const Json j = read_json_file(src.path);
        if (j.is_object() && j.contains("nodes"))
            result = map_to_json(quiver_to_map(quiver_from_json(j)));
        else
            result = quiver_to_json(map_to_quiver(map_from_json(j).map));
    } else {
        const Fixture f = src.load();
        result = f.quiver ? map_to_json(f.map) : quiver_to_json(map_to_quiver(f.map));
    }
    write_file(g, "dual.json", result.dump(2) + "\n");
    std::cout << result.dump(2) << '\n';
    return 0;
}

std::string matrix_text(const KasteleynMatrix& k) {
    std::ostringstream os;
    for (const auto& row : k.entries) {
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " | " : "") << row[c].pretty();
        os << '\n';
    }
    return os.str();
}

int cmd_kasteleyn(const Globals& g, const Source& src, bool matrix, bool det, bool diagram, bool mirror,
                  const std::string& coeffs) {
    if (!matrix && !det && !diagram && !mirror) matrix = det = diagram = mirror = true;
    const Fixture f = src.load();
    const EdgeSigns signs = f.signs ? *f.signs : kasteleyn_signs(f.map);
    const HomologyWeights h = f.weights ? *f.weights : homology_weights(f.map);
    const KasteleynMatrix k = kasteleyn_matrix(f.map, signs, h);
    const LaurentPoly2 p = laurent_det(k);
    const ToricDiagram d = toric_diagram(p);
    std::optional<std::vector<mpz_class>> c;
    if (!coeffs.empty()) {
        std::vector<mpz_class> v;
        for (const auto& r : parse_coefficients(coeffs)) {
            if (r.get_den() != 1) throw ParseError("mirror coefficients must be integers");
            v.push_back(r.get_num());
        }
        c = std::move(v);
    }
    Json out;
    std::ostringstream text;
    if (matrix) {
        Json rows = Json::array();
        for (const auto& row : k.entries) {
            Json r = Json::array();
            for (const auto& e : row) r.push_back(e.pretty());
            rows.push_back(r);
        }
        out["matrix"] = rows;
        text << "K (rows white, columns black):\n" << matrix_text(k);
    }
    if (det) {
        out["determinant"] = p.pretty();
        out["determinant_terms"] = p.to_string();
        text << "det K = " << p.pretty() << '\n';
    }
    if (diagram) {
        out["diagram"] = d.to_text();
        text << "toric diagram (a b multiplicity):\n" << d.to_text();
        write_file(g, "diagram.txt", d.to_text());
    }
    if (mirror) {
        out["mirror"] = mirror_equation(d, c);
        text << mirror_equation(d, c) << '\n';
    }
    emit(g, out, text.str());
    return 0;
}

int cmd_matchings(const Globals& g, const Source& src, bool list) {
    const Fixture f = src.load();
    const HomologyWeights h = f.weights ? *f.weights : homology_weights(f.map);
    const MatchingSet ms = enumerate_matchings(f.map, h);
    const EdgeSigns signs = f.signs ? *f.signs : kasteleyn_signs(f.map);
    const ToricDiagram from_det = toric_diagram(laurent_det(kasteleyn_matrix(f.map, signs, h)));
    const ToricDiagram counted = ms.multiplicities().normalized();
    const bool agree = counted == from_det;
    Json out;
    std::ostringstream text;
    out["count"] = ms.matchings.size();
    out["multiplicities"] = counted.to_text();
    out["agrees_with_determinant"] = agree;
    text << ms.matchings.size() << " perfect matchings\n";
    text << "multiplicities (a b count):\n" << counted.to_text();
    if (list) {
        Json arr = Json::array();
        for (const auto& pm : ms.matchings) {
            Json edges = Json::array();
            std::string line;
            for (auto e : pm.edges) {
                edges.push_back(f.map.edges()[e]);
                line += (line.empty() ? "" : " ") + f.map.edges()[e];
            }
            arr.push_back({{"edges", edges}, {"point", {pm.point.a, pm.point.b}}});
            text << "  (" << pm.point.a << "," << pm.point.b << ") " << line << '\n';
        }
        out["matchings"] = arr;
    }
    text << "agrees with |det K|: " << (agree ? "yes" : "no") << '\n';
    emit(g, out, text.str());
    return agree ? 0 : kCheckFailed;
}

int cmd_mutate(const Globals& g, const Source& src, const std::string& node, bool reduce, bool invariance) {
    const Fixture f = src.load();
    const Quiver q = f.quiver ? *f.quiver : map_to_quiver(f.map);
    auto [dual, record] = reduce ? mutate_and_reduce(q, node) : seiberg_mutate(q, node);
    Json out;
    out["quiver"] = quiver_to_json(dual);
    Json rep;
    rep["node"] = record.node;
    rep["terms_before"] = record.terms_before;
    rep["terms_after"] = record.terms_after;
    Json mesons = Json::array();
    for (const auto& me : record.mesons) mesons.push_back({{"id", me.id}, {"incoming", me.incoming}, {"outgoing", me.outgoing}});
    rep["mesons"] = mesons;
    Json removed = Json::array();
    for (const auto& [x, y] : record.removed_pairs) removed.push_back({x, y});
    rep["removed_pairs"] = removed;
    const ValidationReport v = validate_quiver(dual);
    rep["valid"] = v.ok();
    bool ok = v.ok();
    if (invariance) {
        const DualityReport d = check_duality_invariance(q, dual);
        rep["invariance"] = {{"polygons_equal", d.polygons_equal},
                             {"boundary_equal", d.boundary_equal},
                             {"canonical_before", d.canonical_first.to_text()},
                             {"canonical_after", d.canonical_second.to_text()}};
        ok = ok && d.equal();
    }
    out["report"] = rep;
    write_file(g, "mutated.json", out["quiver"].dump(2) + "\n");
    std::cout << out.dump(2) << '\n';
    return ok ? 0 : kCheckFailed;
}

int cmd_geometry(const Globals& g, const Source& src, bool rcharges, bool tau, bool j) {
    if (!rcharges && !tau && !j) rcharges = tau = j = true;
    const Fixture f = src.load();
    AMaxOptions opt;
    opt.seed = seed_from_environment();
    const RChargeAssignment r = maximize_a(f.map, opt);
    Json out;
    std::ostringstream text;
    if (rcharges) {
        Json arr = Json::array();
        text << "R-charges (a = " << format_number(r.objective) << "):\n";
        for (std::size_t e = 0; e < r.r.size(); ++e) {
            arr.push_back({{"edge", f.map.edges()[e]}, {"R", r.r[e]}});
            text << "  " << f.map.edges()[e] << " " << format_number(r.r[e]) << '\n';
        }
        out["rcharges"] = arr;
        out["a"] = r.objective;
        out["unique"] = r.unique;
        if (!r.unique) text << "warning: a-maximization runs disagree (maximum not unique)\n";
    }
    if (tau || j) {
        const ModularData md = modular_data(isoradial_periods(f.map, r));
        if (tau) {
            out["tau"] = {md.reduced_tau.real(), md.reduced_tau.imag()};
            text << "tau = " << format_complex(md.reduced_tau) << '\n';
        }
        if (j) {
            out["j"] = {md.j.j.real(), md.j.j.imag()};
            out["J"] = {md.j.J.real(), md.j.J.imag()};
            text << "j = " << format_complex(md.j.j) << '\n' << "J = " << format_complex(md.j.J) << '\n';
        }
    }
    emit(g, out, text.str());
    return 0;
}

int cmd_dessin(const Globals& g, const Source& src) {
    const Fixture f = src.load();
    const PermutationTriple t = permutation_triple(f.map);
    const Passport p = passport(t);
    const int genus_rh = rh_genus(t);
    Json out;
    out["sigma_black"] = cycle_notation(t.sigma_black);
    out["sigma_white"] = cycle_notation(t.sigma_white);
    out["sigma_infinity"] = cycle_notation(t.sigma_infinity);
    out["passport"] = p.to_string();
    out["degree"] = t.degree();
    out["genus"] = genus_rh;
    std::ostringstream text;
    text << "sigma_B = " << cycle_notation(t.sigma_black) << '\n'
         << "sigma_W = " << cycle_notation(t.sigma_white) << '\n'
         << "sigma_inf = " << cycle_notation(t.sigma_infinity) << '\n'
         << "passport " << p.to_string() << '\n'
         << "degree " << t.degree() << '\n'
         << "genus " << genus_rh << '\n';
    emit(g, out, text.str());
    return 0;
}

int cmd_pleth(const Globals& g, const std::string& numer, const std::string& denom, const std::string& op,
              std::size_t order) {
    const TruncatedSeries s = series_from_rational(parse_coefficients(numer), parse_coefficients(denom), order);
    TruncatedSeries r;
    if (op == "pl")
        r = pl(s);
    else if (op == "pe")
        r = pe(s);
    else if (op == "euler")
        r = pe_euler_product(s);
    else
        r = s;
    Json out;
    out["op"] = op;
    out["order"] = order;
    out["series"] = r.to_string();
    Json coeffs = Json::array();
    for (const auto& c : r.coeffs()) coeffs.push_back(c.get_str());
    out["coefficients"] = coeffs;
    emit(g, out, r.to_string() + "\n");
    return 0;
}

LaurentPoly2 polynomial_argument(const std::string& arg) {
    if (fixture_names().end() != std::find(fixture_names().begin(), fixture_names().end(), arg)) {
        const Fixture f = fixture(arg);
        const EdgeSigns s = f.signs ? *f.signs : kasteleyn_signs(f.map);
        const HomologyWeights h = f.weights ? *f.weights : homology_weights(f.map);
        return laurent_det(kasteleyn_matrix(f.map, s, h));
    }
    if (std::filesystem::is_regular_file(arg)) {
        const Fixture f = fixture_from_file(arg);
        const EdgeSigns s = f.signs ? *f.signs : kasteleyn_signs(f.map);
        const HomologyWeights h = f.weights ? *f.weights : homology_weights(f.map);
        return laurent_det(kasteleyn_matrix(f.map, s, h));
    }
    return parse_laurent(arg);
}

int cmd_amoeba(const Globals& g, const std::string& poly, double range, std::size_t grid, const std::string& out_path,
               const std::string& coamoeba_path, const std::vector<std::string>& overrides) {
    std::map<LatticePoint, std::complex<double>> ov;
    for (const auto& o : overrides) ov.insert(parse_override(o));
    const LaurentPoly2 p = polynomial_argument(poly);
    const CurveSamples s = sample_curve(complex_coefficients(p, ov), {range, grid});
    const std::string csv = s.to_csv();
    auto place = [&](const std::string& path) {
        if (path.empty()) return std::string();
        std::filesystem::path target(path);
        if (!g.out_dir.empty() && target.is_relative()) target = std::filesystem::path(g.out_dir) / target;
        if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
        std::ofstream out(target, std::ios::binary);
        out << csv;
        if (!out) throw PreconditionError("cannot write " + target.string());
        return target.string();
    };
    const std::string a = place(out_path);
    const std::string c = place(coamoeba_path);
    Json out;
    out["polynomial"] = p.pretty();
    out["points"] = s.points.size();
    out["skipped_fibers"] = s.skipped_fibers;
    out["diagnostics"] = s.diagnostics;
    std::ostringstream text;
    text << "P = " << p.pretty() << '\n' << s.points.size() << " points, " << s.skipped_fibers << " fibers skipped\n";
    for (const auto& d : s.diagnostics) text << "  " << d << '\n';
    if (!a.empty()) text << "amoeba: " << a << '\n';
    if (!c.empty()) text << "coamoeba: " << c << '\n';
    if (out_path.empty() && coamoeba_path.empty() && !g.json) text << csv;
    emit(g, out, text.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tilingforge: quivers, brane tilings and toric Calabi-Yau data"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "machine-readable JSON output");
    app.add_option("--out-dir", g.out_dir, "directory for written artifacts");
    app.add_option("--tolerance", g.tolerance, "numeric tolerance for checks")->capture_default_str();

    Source validate_src, dualize_src, kast_src, match_src, mutate_src, geo_src, dessin_src;

    auto* validate = app.add_subcommand("validate", "check toric condition, Euler relation and genus");
    validate_src.attach(validate);

    auto* dualize = app.add_subcommand("dualize", "quiver <-> tiling conversion");
    dualize_src.attach(dualize);

    bool k_matrix = false, k_det = false, k_diagram = false, k_mirror = false;
    std::string k_coeffs;
    auto* kast = app.add_subcommand("kasteleyn", "Kasteleyn matrix, determinant and toric diagram");
    kast_src.attach(kast);
    kast->add_flag("--matrix", k_matrix);
    kast->add_flag("--det", k_det);
    kast->add_flag("--diagram", k_diagram);
    kast->add_flag("--mirror", k_mirror);
    kast->add_option("--coeffs", k_coeffs, "mirror coefficients, one per diagram point in ascending order");

    bool m_list = false;
    auto* match = app.add_subcommand("matchings", "enumerate perfect matchings");
    match_src.attach(match);
    match->add_flag("--list", m_list, "print every matching");

    std::string mu_node;
    bool mu_reduce = false, mu_inv = false;
    auto* mutate = app.add_subcommand("mutate", "Seiberg duality at a node");
    mutate_src.attach(mutate);
    mutate->add_option("--node", mu_node, "node to dualize")->required();
    mutate->add_flag("--reduce", mu_reduce, "integrate out mass terms");
    mutate->add_flag("--check-invariance", mu_inv, "compare toric polygons before and after");

    bool g_r = false, g_tau = false, g_j = false;
    auto* geo = app.add_subcommand("geometry", "a-maximization, periods and j-invariant");
    geo_src.attach(geo);
    geo->add_flag("--rcharges", g_r);
    geo->add_flag("--tau", g_tau);
    geo->add_flag("--j", g_j);

    auto* dessin = app.add_subcommand("dessin", "permutation triple and passport");
    dessin_src.attach(dessin);

    std::string p_numer, p_denom = "1", p_op = "pl";
    std::size_t p_order = kDefaultSeriesOrder;
    auto* pleth = app.add_subcommand("pleth", "plethystic exponential and logarithm");
    pleth->add_option("--numer", p_numer, "numerator coefficients, ascending")->required();
    pleth->add_option("--denom", p_denom, "denominator coefficients, ascending")->capture_default_str();
    pleth->add_option("--op", p_op, "pl, pe, euler or series")
        ->check(CLI::IsMember({"pl", "pe", "euler", "series"}))
        ->capture_default_str();
    pleth->add_option("-N,--order", p_order, "truncation order")->capture_default_str();

    std::string a_poly, a_out, a_co;
    double a_range = 4;
    std::size_t a_grid = 200;
    std::vector<std::string> a_coeff;
    auto* amoeba = app.add_subcommand("amoeba", "sample the amoeba and coamoeba of P(z,w) = 0");
    amoeba->add_option("poly", a_poly, "polynomial, fixture name, or quiver/map JSON file")->required();
    amoeba->add_option("--range", a_range, "log-modulus range")->capture_default_str();
    amoeba->add_option("--grid", a_grid, "samples per axis")->capture_default_str();
    amoeba->add_option("--out", a_out, "amoeba CSV");
    amoeba->add_option("--coamoeba-out", a_co, "coamoeba CSV");
    amoeba->add_option("--coeff", a_coeff, "coefficient override a,b=re[,im]");

    Source pipe_src;
    bool pp_all = false, pp_validate = false, pp_dualize = false, pp_det = false, pp_match = false, pp_geo = false,
         pp_dessin = false, pp_inv = false;
    std::string pp_mutate;
    auto* pipeline = app.add_subcommand("pipeline", "run the whole chain with invariant checks");
    pipe_src.attach(pipeline);
    pipeline->add_flag("--all", pp_all, "every stage (mutation still needs --mutate)");
    pipeline->add_flag("--validate", pp_validate);
    pipeline->add_flag("--dualize", pp_dualize);
    pipeline->add_flag("--det,--kasteleyn", pp_det);
    pipeline->add_flag("--matchings", pp_match);
    pipeline->add_flag("--geometry", pp_geo);
    pipeline->add_flag("--dessin", pp_dessin);
    pipeline->add_option("--mutate", pp_mutate, "dualize at this node");
    pipeline->add_flag("--check-invariance", pp_inv);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) return cmd_validate(g, validate_src);
        if (*dualize) return cmd_dualize(g, dualize_src);
        if (*kast) return cmd_kasteleyn(g, kast_src, k_matrix, k_det, k_diagram, k_mirror, k_coeffs);
        if (*match) return cmd_matchings(g, match_src, m_list);
        if (*mutate) return cmd_mutate(g, mutate_src, mu_node, mu_reduce, mu_inv);
        if (*geo) return cmd_geometry(g, geo_src, g_r, g_tau, g_j);
        if (*dessin) return cmd_dessin(g, dessin_src);
        if (*pleth) return cmd_pleth(g, p_numer, p_denom, p_op, p_order);
        if (*amoeba) return cmd_amoeba(g, a_poly, a_range, a_grid, a_out, a_co, a_coeff);
        if (*pipeline) {
            const Fixture f = pipe_src.load();
            PipelineOptions opt;
            opt.seed = seed_from_environment();
            opt.tolerance = g.tolerance;
            if (!g.out_dir.empty()) opt.out_dir = g.out_dir;
            if (!pp_all) {
                if (pp_validate) opt.stages.insert("validate");
                if (pp_dualize) opt.stages.insert("dualize");
                if (pp_det) opt.stages.insert("kasteleyn");
                if (pp_match) opt.stages.insert("matchings");
                if (pp_geo) opt.stages.insert("geometry");
                if (pp_dessin) opt.stages.insert("dessin");
                // A mutation-only request runs just that stage.
                if (opt.stages.empty() && !pp_mutate.empty()) opt.stages.insert("mutate");
            }
            if (!pp_mutate.empty()) opt.mutate_node = pp_mutate;
            opt.check_invariance = pp_inv;
            const PipelineResult r = run_pipeline(f, opt);
            emit(g, r.report, r.summary);
            return r.ok ? 0 : kCheckFailed;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << '\n';
        return kLibraryError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kLibraryError;
    }
    return 0;
}
