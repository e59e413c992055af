#include "tilingforge/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "tilingforge/dessin.hpp"
#include "tilingforge/error.hpp"
#include "tilingforge/geometry.hpp"
#include "tilingforge/kasteleyn.hpp"
#include "tilingforge/modular.hpp"
#include "tilingforge/mutation.hpp"

namespace tilingforge {

std::string format_number(double x) {
    if (std::abs(x) < 5e-16) x = 0;  // avoid printing "-0"
    std::ostringstream os;
    os << std::setprecision(10) << x;
    return os.str();
}

std::string format_complex(std::complex<double> z) {
    const double im = std::abs(z.imag()) < 5e-16 ? 0.0 : z.imag();
    return format_number(z.real()) + (im < 0 ? " - " : " + ") + format_number(std::abs(im)) + "i";
}

std::uint64_t seed_from_environment() {
    const char* raw = std::getenv("TILINGFORGE_SEED");
    if (!raw || !*raw) return 0x5EED;
    const std::string s = raw;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &used, 0);
    } catch (const std::exception&) {
        throw ParseError("TILINGFORGE_SEED must be an integer, got '" + s + "'");
    }
    if (used != s.size()) throw ParseError("TILINGFORGE_SEED must be an integer, got '" + s + "'");
    return v;
}

Fixture fixture_from_file(const std::string& path) {
    const Json j = read_json_file(path);
    Fixture f;
    f.name = std::filesystem::path(path).stem().string();
    if (j.is_object() && j.contains("nodes")) {
        f.quiver = quiver_from_json(j);
        f.map = quiver_to_map(*f.quiver);
    } else if (j.is_object() && j.contains("edges")) {
        MapDocument doc = map_from_json(j);
        f.map = std::move(doc.map);
        f.signs = std::move(doc.signs);
        f.weights = std::move(doc.weights);
    } else {
        throw ParseError(path + ": neither a quiver (\"nodes\") nor a map (\"edges\") document");
    }
    return f;
}

namespace {

class Run {
public:
    Run(const Fixture& f, const PipelineOptions& o) : f_(f), opt_(o) {
        report_["input"] = f.name;
        report_["stages"] = Json::object();
    }

    bool wanted(const std::string& stage) const {
        if (stage == "mutate") return opt_.mutate_node.has_value();
        return opt_.stages.empty() || opt_.stages.contains(stage);
    }

    void stage(const std::string& name, const std::function<void(Json&)>& body) {
        if (!wanted(name)) return;
        Json& out = report_["stages"][name];
        out = Json::object();
        out["checks"] = Json::array();
        current_ = &out;
        try {
            body(out);
        } catch (const Error& e) {
            out["error"] = {{"type", e.name()}, {"message", e.what()}};
            ok_ = false;
            lines_.push_back(name + ": ERROR " + e.name() + ": " + e.what());
        }
        current_ = nullptr;
    }

    void check(const std::string& what, bool pass) {
        (*current_)["checks"].push_back({{"name", what}, {"pass", pass}});
        if (!pass) ok_ = false;
        lines_.push_back(std::string("  [") + (pass ? "PASS" : "FAIL") + "] " + what);
    }

    void say(const std::string& line) { lines_.push_back(line); }

    void artifact(const std::string& file, const std::string& content) {
        if (!opt_.out_dir) return;
        const std::filesystem::path dir(*opt_.out_dir);
        std::filesystem::create_directories(dir);
        std::ofstream out(dir / file, std::ios::binary);
        out << content;
        if (!out) throw PreconditionError("cannot write " + (dir / file).string());
    }

    PipelineResult finish() {
        report_["ok"] = ok_;
        PipelineResult r;
        std::ostringstream os;
        for (const auto& l : lines_) os << l << '\n';
        os << (ok_ ? "pipeline: OK" : "pipeline: FAILED") << '\n';
        r.summary = os.str();
        r.ok = ok_;
        r.report = std::move(report_);
        if (opt_.out_dir) {
            artifact("report.json", r.report.dump(2) + "\n");
            artifact("summary.txt", r.summary);
        }
        return r;
    }

    const Fixture& f_;
    const PipelineOptions& opt_;
    Json report_;
    Json* current_ = nullptr;
    bool ok_ = true;
    std::vector<std::string> lines_;
};

Quiver quiver_of(const Fixture& f) { return f.quiver ? *f.quiver : map_to_quiver(f.map); }

}  // namespace

PipelineResult run_pipeline(const Fixture& f, const PipelineOptions& opt) {
    Run run(f, opt);
    const CombinatorialMap& m = f.map;

    run.stage("validate", [&](Json& out) {
        run.say("validate:");
        const Quiver q = quiver_of(f);
        const ValidationReport v = validate_quiver(q);
        out["N0"] = v.n0;
        out["N1"] = v.n1;
        out["N2"] = v.n2;
        out["diagnostics"] = v.diagnostics;
        run.say("  N0 = " + std::to_string(v.n0) + ", N1 = " + std::to_string(v.n1) + ", N2 = " + std::to_string(v.n2));
        run.check("words are closed cycles", v.cycles);
        run.check("toric condition", v.toric);
        run.check("Euler relation N0 - N1 + N2 = 0", v.euler);
    });

    run.stage("dualize", [&](Json& out) {
        run.say("dualize:");
        const int g = genus(m);
        out["genus"] = g;
        out["black_nodes"] = m.num_black();
        out["white_nodes"] = m.num_white();
        out["edges"] = m.num_edges();
        out["faces"] = m.num_faces();
        out["map"] = map_to_json(m, f.signs, f.weights);
        run.artifact("map.json", out["map"].dump(2) + "\n");
        run.check("genus 1", g == 1);
        if (f.quiver) run.check("map_to_quiver(quiver_to_map(Q)) isomorphic to Q", quivers_isomorphic(map_to_quiver(m), *f.quiver));
    });

    std::optional<LaurentPoly2> det;
    HomologyWeights weights;
    run.stage("kasteleyn", [&](Json& out) {
        run.say("kasteleyn:");
        const EdgeSigns signs = f.signs ? *f.signs : kasteleyn_signs(m);
        weights = f.weights ? *f.weights : homology_weights(m);
        run.check("Kasteleyn face parity", satisfies_kasteleyn_condition(m, signs));
        run.check("weights are a cocycle", is_cocycle(m, weights));
        run.check("weights span H^1", is_homology_basis(m, weights));
        det = laurent_det(kasteleyn_matrix(m, signs, weights));
        const ToricDiagram d = toric_diagram(*det);
        out["determinant"] = det->pretty();
        out["determinant_terms"] = det->to_string();
        out["diagram"] = d.to_text();
        out["canonical_boundary"] = canonical_polygon(boundary_profile(d)).to_text();
        out["mirror"] = mirror_equation(d);
        run.artifact("diagram.txt", d.to_text());
        run.say("  det K = " + det->pretty());
        run.say("  " + mirror_equation(d));
        if (f.expected.determinant)
            run.check("determinant matches " + *f.expected.determinant,
                      equal_up_to_unit(*det, parse_laurent(*f.expected.determinant)));
        if (f.expected.canonical_boundary)
            run.check("canonical toric polygon", out["canonical_boundary"].get<std::string>() == *f.expected.canonical_boundary);
    });

    run.stage("matchings", [&](Json& out) {
        run.say("matchings:");
        if (weights.size() != m.num_edges()) weights = f.weights ? *f.weights : homology_weights(m);
        const MatchingSet ms = enumerate_matchings(m, weights);
        const ToricDiagram counted = ms.multiplicities().normalized();
        out["count"] = ms.matchings.size();
        out["multiplicities"] = counted.to_text();
        run.say("  " + std::to_string(ms.matchings.size()) + " perfect matchings");
        const EdgeSigns signs = f.signs ? *f.signs : kasteleyn_signs(m);
        const LaurentPoly2 p = det ? *det : laurent_det(kasteleyn_matrix(m, signs, weights));
        run.check("|det K| coefficients equal matching counts", counted == toric_diagram(p));
    });

    run.stage("geometry", [&](Json& out) {
        run.say("geometry:");
        AMaxOptions ao;
        ao.seed = opt.seed;
        const RChargeAssignment r = maximize_a(m, ao);
        Json rj = Json::array();
        for (double x : r.r) rj.push_back(x);
        out["rcharges"] = rj;
        out["a"] = r.objective;
        out["unique"] = r.unique;
        out["residual"] = r.residual;
        std::string rs;
        for (std::size_t e = 0; e < r.r.size(); ++e) rs += (e ? " " : "") + format_number(r.r[e]);
        run.say("  R = " + rs);
        run.check("constraint residual < 1e-9", r.residual < 1e-9);
        run.check("unique maximum", r.unique);
        if (f.expected.rcharges) {
            bool close = f.expected.rcharges->size() == r.r.size();
            for (std::size_t e = 0; close && e < r.r.size(); ++e)
                close = std::abs(r.r[e] - (*f.expected.rcharges)[e]) <= opt.tolerance;
            run.check("R-charges match reference values", close);
        }
        const Periods p = isoradial_periods(m, r, homology_weights(m));
        const ModularData md = modular_data(p);
        out["omega1"] = {p.omega1.real(), p.omega1.imag()};
        out["omega2"] = {p.omega2.real(), p.omega2.imag()};
        out["tau"] = {md.reduced_tau.real(), md.reduced_tau.imag()};
        out["j"] = {md.j.j.real(), md.j.j.imag()};
        out["J"] = {md.j.J.real(), md.j.J.imag()};
        run.say("  tau = " + format_complex(md.reduced_tau) + ", J = " + format_complex(md.j.J));
        run.check("rhombus angles close to 1e-9", p.closure_error < 1e-9);
        if (f.expected.J) run.check("J matches reference value", std::abs(md.j.J - *f.expected.J) <= opt.tolerance);
    });

    run.stage("dessin", [&](Json& out) {
        run.say("dessin:");
        const PermutationTriple t = permutation_triple(m);
        check_triple(t);
        const Passport pp = passport(t);
        const int g = rh_genus(t);
        out["sigma_black"] = cycle_notation(t.sigma_black);
        out["sigma_white"] = cycle_notation(t.sigma_white);
        out["sigma_infinity"] = cycle_notation(t.sigma_infinity);
        out["passport"] = pp.to_string();
        out["degree"] = t.degree();
        out["genus"] = g;
        run.say("  passport " + pp.to_string() + ", degree " + std::to_string(t.degree()));
        run.check("Riemann-Hurwitz genus equals map genus", g == genus(m));
        run.check("balanced (B = W)", cycles_of(t.sigma_black).size() == cycles_of(t.sigma_white).size());
        std::vector<std::size_t> face_lengths;
        for (const auto& face : m.faces()) face_lengths.push_back(face.size());
        std::sort(face_lengths.begin(), face_lengths.end());
        run.check("sigma_infinity cycles match face lengths", face_lengths == pp.infinity);
        if (f.expected.passport) run.check("passport matches " + *f.expected.passport, pp.to_string() == *f.expected.passport);
    });

    run.stage("mutate", [&](Json& out) {
        run.say("mutate at node " + *opt.mutate_node + ":");
        const Quiver q = quiver_of(f);
        auto [dual, record] = mutate_and_reduce(q, *opt.mutate_node);
        out["quiver"] = quiver_to_json(dual);
        out["terms_before"] = record.terms_before;
        out["terms_after"] = record.terms_after;
        Json mesons = Json::array();
        for (const auto& me : record.mesons) mesons.push_back({{"id", me.id}, {"incoming", me.incoming}, {"outgoing", me.outgoing}});
        out["mesons"] = mesons;
        Json removed = Json::array();
        for (const auto& [x, y] : record.removed_pairs) removed.push_back({x, y});
        out["removed_pairs"] = removed;
        run.artifact("mutated.json", out["quiver"].dump(2) + "\n");
        run.check("mutated quiver validates", validate_quiver(dual).ok());
        run.check("mutated tiling has genus 1", genus(quiver_to_map(dual)) == 1);
        if (opt.check_invariance) {
            const DualityReport rep = check_duality_invariance(q, dual);
            out["canonical_before"] = rep.canonical_first.to_text();
            out["canonical_after"] = rep.canonical_second.to_text();
            run.check("toric polygon invariant", rep.polygons_equal);
            run.check("boundary multiplicities invariant", rep.boundary_equal);
            run.say(std::string("  invariance ") + (rep.equal() ? "PASS" : "FAIL"));
        }
    });

    return run.finish();
}

}  // namespace tilingforge
