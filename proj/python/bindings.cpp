#include <pybind11/chrono.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sgp/cert_json.hpp"
#include "sgp/constructions.hpp"
#include "sgp/errors.hpp"
#include "sgp/geodesics.hpp"
#include "sgp/graph.hpp"
#include "sgp/graph_spec.hpp"
#include "sgp/strong_geodetic.hpp"

namespace py = pybind11;

namespace {

// geodesic counts exceed 64 bits quickly; route them through python ints
py::int_ big_to_pyint(const sgp::BigUint& b) {
    PyObject* obj = PyLong_FromString(b.to_string().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

sgp::SolverConfig config_from_kwargs(std::uint64_t cap, double budget_seconds, int workers,
                                     bool deterministic,
                                     const std::vector<std::vector<int>>& hints) {
    sgp::SolverConfig cfg;
    cfg.pair_enumeration_cap = cap;
    cfg.budget = std::chrono::milliseconds(static_cast<long long>(budget_seconds * 1000.0));
    cfg.workers = workers;
    cfg.deterministic = deterministic;
    cfg.hints = hints;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "strong geodetic sets: exact solver, verifier and thin grid/cylinder constructions";

    py::register_exception<sgp::InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
    py::register_exception<sgp::ParseError>(m, "GraphParseError", PyExc_ValueError);
    py::register_exception<sgp::NotConnected>(m, "NotConnected", PyExc_ValueError);
    py::register_exception<sgp::BudgetExhausted>(m, "BudgetExhausted", PyExc_RuntimeError);
    py::register_exception<sgp::TruncationInconclusive>(m, "TruncationInconclusive",
                                                        PyExc_RuntimeError);

    py::class_<sgp::Graph>(m, "Graph")
        .def_static("from_edges", &sgp::Graph::from_edges, py::arg("vertex_count"),
                    py::arg("edges"))
        .def_property_readonly("vertex_count", &sgp::Graph::vertex_count)
        .def_property_readonly("edge_count", &sgp::Graph::edge_count)
        .def("neighbors", &sgp::Graph::neighbors, py::arg("v"),
             py::return_value_policy::reference_internal)
        .def("has_edge", &sgp::Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("edges", &sgp::Graph::edges)
        .def("__repr__", [](const sgp::Graph& g) {
            return "<Graph n=" + std::to_string(g.vertex_count()) +
                   " m=" + std::to_string(g.edge_count()) + ">";
        });

    py::class_<sgp::LayerLabeling> lab(m, "LayerLabeling");
    py::enum_<sgp::LayerLabeling::FactorKind>(lab, "FactorKind")
        .value("path", sgp::LayerLabeling::FactorKind::path)
        .value("cycle", sgp::LayerLabeling::FactorKind::cycle)
        .value("general", sgp::LayerLabeling::FactorKind::general);
    lab.def(py::init<int, int, sgp::LayerLabeling::FactorKind>(), py::arg("left_size"),
            py::arg("right_size"), py::arg("right_kind") = sgp::LayerLabeling::FactorKind::general)
        .def_property_readonly("left_size", &sgp::LayerLabeling::left_size)
        .def_property_readonly("right_size", &sgp::LayerLabeling::right_size)
        .def_property_readonly("right_factor_kind", &sgp::LayerLabeling::right_factor_kind)
        .def("encode", &sgp::LayerLabeling::encode, py::arg("i"), py::arg("j"))
        .def("decode", &sgp::LayerLabeling::decode, py::arg("id"));

    py::class_<sgp::PairGeodesic>(m, "PairGeodesic")
        .def_readonly("u", &sgp::PairGeodesic::u)
        .def_readonly("v", &sgp::PairGeodesic::v)
        .def_readonly("path", &sgp::PairGeodesic::path);

    py::class_<sgp::Certificate>(m, "Certificate")
        .def_readonly("vertices", &sgp::Certificate::vertices)
        .def_readonly("geodesics", &sgp::Certificate::geodesics)
        .def("__len__", [](const sgp::Certificate& c) { return c.vertices.size(); });

    py::class_<sgp::CoverageReport>(m, "CoverageReport")
        .def_readonly("valid", &sgp::CoverageReport::valid)
        .def_readonly("uncovered", &sgp::CoverageReport::uncovered)
        .def_readonly("violations", &sgp::CoverageReport::violations)
        .def("__bool__", [](const sgp::CoverageReport& r) { return r.valid; });

    py::class_<sgp::AnchorSet>(m, "AnchorSet")
        .def_readonly("n", &sgp::AnchorSet::n)
        .def_readonly("r", &sgp::AnchorSet::r)
        .def_readonly("k", &sgp::AnchorSet::k)
        .def_readonly("ell", &sgp::AnchorSet::ell)
        .def_readonly("positions", &sgp::AnchorSet::positions)
        .def_readonly("top_extras", &sgp::AnchorSet::top_extras)
        .def_readonly("bottom_extras", &sgp::AnchorSet::bottom_extras)
        .def_property_readonly("set_size", &sgp::AnchorSet::set_size);

    // graph builders and metric queries
    m.def("build_path", &sgp::build_path, py::arg("n"));
    m.def("build_cycle", &sgp::build_cycle, py::arg("n"));
    m.def("cartesian_product", &sgp::cartesian_product, py::arg("g"), py::arg("h"));
    m.def("build_grid", &sgp::build_grid, py::arg("r"), py::arg("n"));
    m.def("build_cylinder", &sgp::build_cylinder, py::arg("r"), py::arg("n"));
    m.def("from_edge_list",
          static_cast<sgp::Graph (*)(const std::string&)>(&sgp::from_edge_list), py::arg("text"));
    m.def("to_edge_list", &sgp::to_edge_list, py::arg("graph"));
    m.def("bfs_distances", &sgp::bfs_distances, py::arg("graph"), py::arg("source"));
    m.def("diameter", &sgp::diameter, py::arg("graph"));
    m.def(
        "project",
        [](const sgp::VertexPath& path, const sgp::LayerLabeling& labeling, const std::string& side) {
            if (side != "left" && side != "right")
                throw sgp::InvalidParameter("side must be 'left' or 'right'");
            return sgp::project(path, labeling,
                                side == "left" ? sgp::ProjectionSide::left
                                               : sgp::ProjectionSide::right);
        },
        py::arg("path"), py::arg("labeling"), py::arg("side"));

    // geodesic machinery
    m.def(
        "count_geodesics",
        [](const sgp::Graph& g, int source, int target) {
            return big_to_pyint(sgp::count_geodesics(sgp::build_dag(g, source), target));
        },
        py::arg("graph"), py::arg("source"), py::arg("target"));
    m.def(
        "enumerate_geodesics",
        [](const sgp::Graph& g, int source, int target, std::uint64_t cap) {
            auto dag = sgp::build_dag(g, source);
            auto res = sgp::enumerate_geodesics(g, dag, target, cap);
            return py::make_tuple(res.paths, res.truncated);
        },
        py::arg("graph"), py::arg("source"), py::arg("target"), py::arg("cap") = 1'000'000,
        "returns (paths, truncated)");
    m.def(
        "interval",
        [](const sgp::Graph& g, int x, int y) { return sgp::interval(g, x, y).to_vector(); },
        py::arg("graph"), py::arg("x"), py::arg("y"));
    m.def("is_geodesic", &sgp::is_geodesic, py::arg("graph"), py::arg("path"));

    // the problem core
    m.def("verify_certificate", &sgp::verify_certificate, py::arg("graph"), py::arg("certificate"));
    m.def(
        "has_assignment",
        [](const sgp::Graph& g, const std::vector<int>& s, std::uint64_t cap,
           double budget_seconds, int workers, bool deterministic) {
            auto res = sgp::has_assignment(
                g, s, config_from_kwargs(cap, budget_seconds, workers, deterministic, {}));
            const char* status = nullptr;
            switch (res.status) {
                case sgp::AssignmentStatus::found: status = "found"; break;
                case sgp::AssignmentStatus::none: status = "none"; break;
                case sgp::AssignmentStatus::inconclusive_truncated: status = "truncated"; break;
                case sgp::AssignmentStatus::inconclusive_budget: status = "budget"; break;
            }
            return py::make_tuple(status, res.certificate);
        },
        py::arg("graph"), py::arg("s"), py::arg("cap") = 1'000'000,
        py::arg("budget_seconds") = 0.0, py::arg("workers") = 1, py::arg("deterministic") = true,
        "returns (status, certificate_or_None)");
    m.def(
        "strong_geodetic_number",
        [](const sgp::Graph& g, std::uint64_t cap, double budget_seconds, int workers,
           bool deterministic, const std::vector<std::vector<int>>& hints) {
            auto res = sgp::strong_geodetic_number(
                g, config_from_kwargs(cap, budget_seconds, workers, deterministic, hints));
            return py::make_tuple(res.sg, res.certificate);
        },
        py::arg("graph"), py::arg("cap") = 1'000'000, py::arg("budget_seconds") = 0.0,
        py::arg("workers") = 1, py::arg("deterministic") = true,
        py::arg("hints") = std::vector<std::vector<int>>{}, "returns (sg, certificate)");
    m.def("geodetic_number", &sgp::geodetic_number, py::arg("graph"),
          "returns (g, witness_vertices)");
    m.def("covering_lower_bound", &sgp::covering_lower_bound, py::arg("graph"));
    m.def("ceil_two_sqrt", &sgp::ceil_two_sqrt, py::arg("m"));
    m.def("product_lower_bound", &sgp::product_lower_bound, py::arg("r"), py::arg("g"),
          py::arg("u"));
    m.def("find_uncrossed_layer", &sgp::find_uncrossed_layer, py::arg("product"),
          py::arg("labeling"), py::arg("certificate"));

    // constructions
    m.def("grid_anchors", &sgp::grid_anchors, py::arg("r"), py::arg("n"));
    m.def("cylinder_anchors", &sgp::cylinder_anchors, py::arg("r"), py::arg("n"));
    m.def("build_certificate", &sgp::build_certificate, py::arg("anchors"));
    m.def("grid_threshold", &sgp::grid_threshold, py::arg("n"));
    m.def("cylinder_threshold", &sgp::cylinder_threshold, py::arg("n"));

    // spec + json plumbing shared with the CLI
    m.def(
        "build_graph",
        [](const std::string& spec) {
            auto built = sgp::build_graph_spec(spec);
            return py::make_tuple(built.graph, built.labeling);
        },
        py::arg("spec"), "graph spec -> (Graph, LayerLabeling or None)");
    m.def(
        "certificate_to_json",
        [](const sgp::Certificate& cert, const std::string& graph_spec,
           const std::optional<sgp::LayerLabeling>& labeling) {
            return sgp::certificate_to_json(cert, graph_spec, labeling).dump(2);
        },
        py::arg("certificate"), py::arg("graph_spec") = "", py::arg("labeling") = std::nullopt);
    m.def("certificate_from_json", &sgp::certificate_from_json_text, py::arg("text"));
}
