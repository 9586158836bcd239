#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rainbow/exact.hpp"
#include "rainbow/extract.hpp"
#include "rainbow/finders.hpp"
#include "rainbow/generate.hpp"
#include "rainbow/harness.hpp"
#include "rainbow/io.hpp"
#include "rainbow/verify.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace rainbow;

namespace {

py::list edge_list(const std::vector<Edge>& edges) {
    py::list out;
    for (const auto& e : edges) out.append(py::make_tuple(e.a, e.b));
    return out;
}

py::dict outcome_dict(const FinderOutcome& out) {
    py::dict d;
    d["success"] = out.success();
    d["diagnostics"] = out.diagnostics.to_json();
    if (out.success()) {
        d["certificate"] = certificate_to_json(out.violation());
    } else {
        d["stage"] = out.refusal().stage;
        d["observed"] = out.refusal().observed;
        d["required"] = out.refusal().required;
    }
    return d;
}

PatternGraph as_pattern(const py::object& spec) {
    if (py::isinstance<PatternGraph>(spec)) return spec.cast<PatternGraph>();
    return resolve_pattern(spec.cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Rainbow-copy certificates for families of edge colorings of K_n";

    static py::exception<Error> base(m, "RainbowError");
    py::register_exception<ScaleGuardExceeded>(m, "ScaleGuardExceeded", base.ptr());
    py::register_exception<FormatError>(m, "FormatError", base.ptr());
    py::register_exception<BudgetExhausted>(m, "BudgetExhausted", base.ptr());

    py::class_<PatternGraph>(m, "Pattern")
        .def(py::init([](std::size_t v, const std::vector<std::pair<Vertex, Vertex>>& edges, const std::string& name) {
                 std::vector<Edge> es;
                 for (auto [a, b] : edges) es.push_back(make_edge(a, b));
                 return PatternGraph(v, std::move(es), name);
             }),
             "num_vertices"_a, "edges"_a, "name"_a = "")
        .def_static("parse", [](const std::string& tag) { return parse_pattern(tag); })
        .def_property_readonly("num_vertices", &PatternGraph::num_vertices)
        .def_property_readonly("num_edges", &PatternGraph::num_edges)
        .def_property_readonly("name", &PatternGraph::name)
        .def_property_readonly("edges", [](const PatternGraph& g) { return edge_list(g.edges()); })
        .def("__eq__", [](const PatternGraph& a, const PatternGraph& b) { return a == b; })
        .def("__repr__", [](const PatternGraph& g) {
            return "<Pattern " + (g.name().empty() ? std::string("?") : g.name()) + " v=" +
                   std::to_string(g.num_vertices()) + " e=" + std::to_string(g.num_edges()) + ">";
        });

    m.def("path", &path);
    m.def("star", &star);
    m.def("matching", &matching);
    m.def("cycle", &cycle);
    m.def("clique", &clique);
    m.def("complete_bipartite", &complete_bipartite);
    m.def("isomorphic", &isomorphic);
    m.def("copy_count", [](const py::object& p, std::size_t n) { return copy_count(as_pattern(p), n); });

    py::class_<ColoringFamily>(m, "Family")
        .def_static("uniform", &ColoringFamily::uniform, "n"_a, "k"_a, "seed"_a)
        .def_static("monochromatic", &ColoringFamily::monochromatic, "n"_a, "k"_a = 1)
        .def_static("injective", py::overload_cast<std::size_t>(&ColoringFamily::injective), "n"_a)
        .def_static("rotated_sum", &ColoringFamily::rotated_sum, "n"_a, "k"_a)
        .def_static("dense", &ColoringFamily::dense, "n"_a, "k"_a, "colors"_a)
        .def_static("load", [](const std::string& path) { return load_family(path); })
        .def("save", [](const ColoringFamily& f, const std::string& path) { save_family(path, f); })
        .def_property_readonly("n", &ColoringFamily::n)
        .def_property_readonly("k", &ColoringFamily::k)
        .def("color", py::overload_cast<Vertex, Vertex, Vertex>(&ColoringFamily::color, py::const_), "owner"_a,
             "u"_a, "v"_a)
        .def("cells", [](const ColoringFamily& f) {
            const auto d = f.materialize();
            return std::vector<Color>(d.cells().begin(), d.cells().end());
        })
        .def("__eq__", [](const ColoringFamily& a, const ColoringFamily& b) { return a == b; });

    m.def(
        "family_is_good",
        [](const ColoringFamily& f, const py::object& p, std::uint64_t max_copies) {
            GoodnessOptions options;
            options.max_copies = max_copies;
            const auto report = family_is_good(f, as_pattern(p), options);
            py::dict d;
            d["is_good"] = report.is_good;
            d["copies_checked"] = report.copies_checked;
            d["witness"] = report.witness ? py::object(py::str(certificate_to_json({*report.witness, {}, {}})))
                                          : py::object(py::none());
            return d;
        },
        "family"_a, "pattern"_a, "max_copies"_a = 100'000'000);

    m.def(
        "check_certificate",
        [](const ColoringFamily& f, const std::string& json) {
            const auto check = check_anchored(f, certificate_from_json(json));
            return py::make_tuple(check.valid, check.problems);
        },
        "family"_a, "certificate_json"_a);

    m.def(
        "find",
        [](const ColoringFamily& f, const py::object& p) { return outcome_dict(find_for_pattern(f, as_pattern(p))); },
        "family"_a, "pattern"_a);
    m.def(
        "generic_find",
        [](const ColoringFamily& f, const py::object& p) { return outcome_dict(generic_find(f, as_pattern(p))); },
        "family"_a, "pattern"_a);
    m.def("detect_h6_member", [](const py::object& p) {
        const auto member = detect_h6_member(as_pattern(p));
        return py::make_tuple(member.tag, member.embedding);
    });
    m.def("minimum_host", [](const py::object& p) { return minimum_host(as_pattern(p)); });
    m.def("desk_points", [] {
        py::list out;
        for (const auto& d : desk_points()) out.append(py::make_tuple(d.finder, d.host, d.k));
        return out;
    });

    m.def("star_extract", [](const ColoringFamily& f) {
        const auto s = star_extract(f);
        return py::dict("x"_a = s.x, "S"_a = s.S, "P"_a = s.P, "triple_count"_a = s.triple_count);
    });
    m.def("matching_extract", [](const ColoringFamily& f) {
        const auto s = matching_extract(f);
        return py::dict("Y"_a = s.Y, "M"_a = edge_list(s.M), "triple_count"_a = s.triple_count);
    });
    m.def("bipartition_extract", [](const ColoringFamily& f) {
        const auto s = bipartition_extract(f);
        return py::dict("A"_a = s.A, "B"_a = s.B, "triple_count"_a = s.triple_count);
    });
    m.def("clique_extract", [](const ColoringFamily& f) {
        const auto s = clique_extract(f);
        return py::dict("X"_a = s.X, "L"_a = s.L, "pair_count"_a = s.pair_count);
    });

    m.def(
        "decide_good_exists",
        [](std::size_t n, const py::object& p, Color k, std::uint64_t max_nodes) {
            DecideOptions options;
            options.max_nodes = max_nodes;
            auto d = decide_good_exists(n, as_pattern(p), k, options);
            return py::make_tuple(d.good_exists, d.witness ? py::cast(*d.witness) : py::object(py::none()));
        },
        "n"_a, "pattern"_a, "k"_a, "max_nodes"_a = 200'000'000);
    m.def(
        "compute_c",
        [](std::size_t n, const py::object& p, Color k_max) {
            const auto r = compute_c(n, as_pattern(p), k_max);
            return py::dict("value"_a = r.value, "lower"_a = r.lower, "upper"_a = r.upper, "method"_a = r.method);
        },
        "n"_a, "pattern"_a, "k_max"_a = 5);
    m.def(
        "cnf",
        [](std::size_t n, const py::object& p, Color k) {
            std::ostringstream out;
            write_cnf(out, n, as_pattern(p), k);
            return out.str();
        },
        "n"_a, "pattern"_a, "k"_a);
    m.def("decode_model", [](std::size_t n, Color k, const std::vector<int>& literals) {
        return decode_model(n, k, literals);
    });

    m.def(
        "generate",
        [](const std::string& kind, std::size_t n, Color k, std::uint64_t seed, const py::object& p,
           std::uint64_t budget) {
            GeneratorSpec spec{parse_generator_kind(kind), n, k, seed, std::nullopt, budget};
            if (!p.is_none()) spec.pattern = as_pattern(p);
            return generate(spec);
        },
        "kind"_a, "n"_a, "k"_a, "seed"_a = 0, "pattern"_a = py::none(), "budget"_a = 1'000'000);
    m.def(
        "construct_good_family",
        [](std::size_t n, const py::object& p, Color k, std::uint64_t seed, std::uint64_t budget) {
            auto r = construct_good_family(n, as_pattern(p), k, seed, budget);
            return py::dict("family"_a = r.family ? py::cast(*r.family) : py::object(py::none()),
                            "resamples"_a = r.resamples, "bad_copies"_a = r.bad_copies);
        },
        "n"_a, "pattern"_a, "k"_a, "seed"_a = 0, "budget"_a = 1'000'000);

    m.def(
        "sweep",
        [](const std::vector<std::string>& patterns, const std::vector<std::size_t>& hosts,
           const std::vector<Color>& ks, const std::vector<std::uint64_t>& seeds, unsigned threads) {
            std::vector<SweepRow> rows;
            {
                py::gil_scoped_release release;
                rows = run_sweep(SweepGrid{patterns, hosts, ks, seeds}, {}, threads);
            }
            py::list out;
            for (const auto& r : rows)
                out.append(py::dict("pattern"_a = r.pattern, "n"_a = r.n, "k"_a = r.k, "seed"_a = r.seed,
                                    "outcome"_a = r.outcome, "stage"_a = r.stage, "micros"_a = r.micros));
            return out;
        },
        "patterns"_a, "hosts"_a, "ks"_a, "seeds"_a, "threads"_a = 1);
}
