#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

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

namespace py = pybind11;
using namespace tilingforge;

namespace {

// A source is a built-in fixture name or the text of a quiver/map document.
Fixture resolve(const std::string& source) {
    const auto& names = fixture_names();
    if (std::find(names.begin(), names.end(), source) != names.end()) return fixture(source);
    const Json j = parse_json(source);
    Fixture f;
    f.name = "input";
    if (j.is_object() && j.contains("nodes")) {
        f.quiver = quiver_from_json(j);
        f.map = quiver_to_map(*f.quiver);
    } else {
        MapDocument d = map_from_json(j);
        f.map = std::move(d.map);
        f.signs = std::move(d.signs);
        f.weights = std::move(d.weights);
    }
    return f;
}

Quiver quiver_of(const Fixture& f) { return f.quiver ? *f.quiver : map_to_quiver(f.map); }

LaurentPoly2 determinant_of(const Fixture& f) {
    const EdgeSigns s = f.signs ? *f.signs : kasteleyn_signs(f.map);
    const HomologyWeights h = f.weights ? *f.weights : homology_weights(f.map);
    return laurent_det(kasteleyn_matrix(f.map, s, h));
}

std::vector<Rational> rationals(const std::vector<std::string>& xs) {
    std::vector<Rational> out;
    for (const auto& x : xs) out.push_back(rational_from_json(Json(x)));
    return out;
}

std::vector<std::string> strings(const TruncatedSeries& s) {
    std::vector<std::string> out;
    for (const auto& c : s.coeffs()) out.push_back(rational_to_string(c));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Brane tilings, Kasteleyn determinants and toric Calabi-Yau data";

    static py::exception<Error> base(m, "TilingForgeError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(base, (std::string(e.name()) + ": " + e.what()).c_str());
        }
    });

    m.def("fixture_names", &fixture_names);

    m.def("fixture_document", [](const std::string& name) {
        const Fixture f = fixture(name);
        return (f.quiver ? quiver_to_json(*f.quiver) : map_to_json(f.map, f.signs, f.weights)).dump();
    });

    m.def("validate", [](const std::string& quiver_json) {
        const ValidationReport v = validate_quiver(quiver_from_json(parse_json(quiver_json)));
        py::dict d;
        d["toric"] = v.toric;
        d["euler"] = v.euler;
        d["cycles"] = v.cycles;
        d["counts"] = py::make_tuple(v.n0, v.n1, v.n2);
        d["diagnostics"] = v.diagnostics;
        return d;
    });

    m.def("dualize", [](const std::string& source) {
        const Fixture f = resolve(source);
        return (f.quiver ? map_to_json(f.map) : quiver_to_json(map_to_quiver(f.map))).dump();
    });

    m.def("genus", [](const std::string& source) { return genus(resolve(source).map); });

    m.def("determinant", [](const std::string& source) { return determinant_of(resolve(source)).pretty(); });

    m.def("toric_diagram", [](const std::string& polynomial) {
        std::vector<std::tuple<std::int64_t, std::int64_t, std::uint64_t>> out;
        const ToricDiagram d = toric_diagram(parse_laurent(polynomial));
        for (const auto& [p, mult] : d.points()) out.emplace_back(p.a, p.b, mult);
        return out;
    });

    m.def("matching_count", [](const std::string& source) {
        const Fixture f = resolve(source);
        return enumerate_matchings(f.map, f.weights ? *f.weights : homology_weights(f.map)).matchings.size();
    });

    m.def("passport", [](const std::string& source) {
        return passport(permutation_triple(resolve(source).map)).to_string();
    });

    m.def(
        "rcharges",
        [](const std::string& source, std::uint64_t seed) {
            AMaxOptions opt;
            opt.seed = seed;
            return maximize_a(resolve(source).map, opt).r;
        },
        py::arg("source"), py::arg("seed") = 0x5EED);

    m.def("modulus", [](const std::string& source) {
        const Fixture f = resolve(source);
        const ModularData md = modular_data(isoradial_periods(f.map, maximize_a(f.map)));
        return py::make_tuple(md.reduced_tau, md.j.J);
    });

    m.def("tau_reduce", &tau_reduce);
    m.def("klein_j", [](std::complex<double> tau) {
        const KleinJ k = klein_j(tau);
        return py::make_tuple(k.j, k.J);
    });

    m.def(
        "mutate",
        [](const std::string& source, const std::string& node, bool reduce) {
            const Quiver q = quiver_of(resolve(source));
            return quiver_to_json((reduce ? mutate_and_reduce(q, node) : seiberg_mutate(q, node)).first).dump();
        },
        py::arg("source"), py::arg("node"), py::arg("reduce") = true);

    m.def("same_polygon", [](const std::string& a, const std::string& b) {
        return check_duality_invariance(quiver_of(resolve(a)), quiver_of(resolve(b))).equal();
    });

    m.def("isomorphic", [](const std::string& a, const std::string& b) {
        return quivers_isomorphic(quiver_of(resolve(a)), quiver_of(resolve(b)));
    });

    m.def(
        "series",
        [](const std::vector<std::string>& numer, const std::vector<std::string>& denom, std::size_t order) {
            return strings(series_from_rational(rationals(numer), rationals(denom), order));
        },
        py::arg("numer"), py::arg("denom"), py::arg("order") = kDefaultSeriesOrder);
    m.def("pe", [](const std::vector<std::string>& coeffs) {
        return strings(pe(TruncatedSeries(rationals(coeffs), coeffs.size() - 1)));
    });
    m.def("pl", [](const std::vector<std::string>& coeffs) {
        return strings(pl(TruncatedSeries(rationals(coeffs), coeffs.size() - 1)));
    });

    m.def(
        "sample_curve",
        [](const std::string& polynomial, double range, std::size_t steps) {
            const CurveSamples s = sample_curve(complex_coefficients(parse_laurent(polynomial)), {range, steps});
            std::vector<std::tuple<double, double, double, double, double>> out;
            out.reserve(s.points.size());
            for (const auto& p : s.points) out.emplace_back(p.rho_z, p.rho_w, p.phi_z, p.phi_w, p.residual);
            return py::make_tuple(out, s.skipped_fibers);
        },
        py::arg("polynomial"), py::arg("range") = 4.0, py::arg("steps") = 200);

    m.def(
        "pipeline",
        [](const std::string& source, std::optional<std::string> mutate_node, bool check_invariance) {
            PipelineOptions opt;
            opt.mutate_node = std::move(mutate_node);
            opt.check_invariance = check_invariance;
            const PipelineResult r = run_pipeline(resolve(source), opt);
            return py::make_tuple(r.ok, r.report.dump(), r.summary);
        },
        py::arg("source"), py::arg("mutate_node") = py::none(), py::arg("check_invariance") = false);
}
