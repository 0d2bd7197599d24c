#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <tuple>

#include "listpack/errors.hpp"
#include "listpack/galvin.hpp"
#include "listpack/packer.hpp"
#include "listpack/search.hpp"

namespace py = pybind11;
using namespace listpack;

namespace {

using Rows = std::vector<std::vector<Color>>;
using EdgeTuple = std::tuple<VertexId, VertexId>;
using EdgeMap = std::map<EdgeTuple, Color>;

std::vector<Edge> to_edges(const std::vector<EdgeTuple>& edges) {
    std::vector<Edge> out;
    for (auto [u, v] : edges) out.push_back({u, v});
    return out;
}

std::vector<EdgeTuple> from_edges(std::span<const Edge> edges) {
    std::vector<EdgeTuple> out;
    for (const Edge& e : edges) out.emplace_back(e.u, e.v);
    return out;
}

Packing to_packing(const Rows& rows) {
    std::vector<Coloring> colorings;
    for (const auto& r : rows) colorings.emplace_back(r);
    return Packing(std::move(colorings));
}

Rows from_packing(const Packing& p) {
    Rows rows;
    for (const auto& r : p.rows()) rows.push_back(r.values());
    return rows;
}

EdgeMap from_edge_coloring(const EdgeColoring& c) {
    EdgeMap out;
    for (std::size_t i = 0; i < c.size(); ++i) out[{c.edges()[i].u, c.edges()[i].v}] = c.colors()[i];
    return out;
}

std::vector<std::string> describe(const VerifyReport& report) {
    std::vector<std::string> out;
    for (const auto& v : report.violations) out.push_back(v.describe());
    return out;
}

SearchBudget budget(std::uint64_t nodes, double seconds) { return {nodes, seconds}; }

py::dict certificate(const ChiStarResult& r) {
    py::dict d;
    d["status"] = std::string(to_string(r.status));
    d["value"] = r.status == SearchStatus::found ? py::cast(r.value) : py::none();
    d["lower_witness"] = r.lower_witness ? py::cast(r.lower_witness->lists()) : py::none();
    d["upper_evidence"] = r.upper_evidence;
    d["color_cap"] = r.color_cap;
    return d;
}

}  // namespace

PYBIND11_MODULE(_listpack, m) {
    m.doc() = "List colorings, list packings and Galvin list edge coloring";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);
    py::register_exception<SearchExhausted>(m, "SearchExhausted", PyExc_RuntimeError);

    const SearchBudget defaults;

    py::class_<Graph>(m, "Graph")
        .def(py::init([](std::size_t n, const std::vector<EdgeTuple>& edges) { return Graph(n, to_edges(edges)); }),
             py::arg("n"), py::arg("edges") = std::vector<EdgeTuple>{})
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edges", [](const Graph& g) { return from_edges(g.edges()); })
        .def_property_readonly("max_degree", &Graph::max_degree)
        .def("neighbors", [](const Graph& g, VertexId v) {
            auto n = g.neighbors(v);
            return std::vector<VertexId>(n.begin(), n.end());
        })
        .def("label", [](const Graph& g, VertexId v) { return g.label(v).to_string(); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph order=" + std::to_string(g.order()) + " edges=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("complete_graph", &complete_graph, py::arg("n"));
    m.def("complete_bipartite", [](std::size_t n, std::size_t k) {
        auto [g, b] = complete_bipartite(n, k);
        return std::make_tuple(g, b.x, b.y);
    });
    m.def("cartesian_product", &cartesian_product);
    m.def("line_graph", &line_graph);
    m.def("bipartition", [](const Graph& g) {
        auto b = bipartition(g);
        return std::make_tuple(b.x, b.y);
    });

    m.def("is_proper_coloring", [](const Graph& g, const Rows& lists, const std::vector<Color>& f) {
        return describe(is_proper_coloring(g, ListAssignment(lists), Coloring(f)));
    }, "Violation descriptions; empty means the coloring is a proper list coloring.");
    m.def("is_proper_packing", [](const Graph& g, const Rows& lists, const Rows& packing) {
        return describe(is_proper_packing(g, ListAssignment(lists), to_packing(packing)));
    }, "Violation descriptions; empty means a proper packing.");
    m.def("lift_lists", [](const Graph& g, const Rows& lists, std::size_t k) {
        auto lifted = lift_lists(g, ListAssignment(lists), k);
        return std::make_tuple(lifted.product, lifted.lists.lists());
    });
    m.def("extract_packing", [](const Graph& g, std::size_t k, const std::vector<Color>& f) {
        return from_packing(extract_packing(g, k, Coloring(f)));
    });

    m.def("pack_complete", [](const Rows& lists, std::optional<std::size_t> size) {
        ListAssignment l(lists);
        const std::size_t m_size = size.value_or(l.uniform_size().value_or(0));
        return from_packing(pack_complete({l.vertex_count(), l, m_size}));
    }, py::arg("lists"), py::arg("m") = py::none(),
          "Proper packing of K_n (n = len(lists)) for an m-assignment with m >= n.");

    m.def("edge_color_bipartite", [](const Graph& g) { return from_edge_coloring(edge_color_bipartite(g, bipartition(g))); });
    m.def("list_edge_color", [](const Graph& g, const std::map<EdgeTuple, std::vector<Color>>& lists) {
        std::vector<Edge> edges;
        Rows rows;
        for (const auto& [e, l] : lists) {
            edges.push_back({std::get<0>(e), std::get<1>(e)});
            rows.push_back(l);
        }
        return from_edge_coloring(list_edge_color(g, bipartition(g), EdgeListAssignment(edges, rows)));
    });

    m.def("solve_list_coloring", [](const Graph& g, const Rows& lists, std::uint64_t nodes, double seconds) -> py::object {
        auto r = solve_list_coloring(g, ListAssignment(lists), budget(nodes, seconds));
        if (r.is_exhausted()) throw SearchExhausted("solve_list_coloring: budget exhausted");
        return r.value ? py::cast(r.value->values()) : py::none();
    }, py::arg("g"), py::arg("lists"), py::arg("node_limit") = defaults.node_limit,
          py::arg("time_limit") = defaults.time_limit);
    m.def("solve_packing", [](const Graph& g, const Rows& lists, std::size_t k, std::uint64_t nodes, double seconds) -> py::object {
        auto r = solve_packing(g, ListAssignment(lists), k, budget(nodes, seconds));
        if (r.is_exhausted()) throw SearchExhausted("solve_packing: budget exhausted");
        return r.value ? py::cast(from_packing(*r.value)) : py::none();
    }, py::arg("g"), py::arg("lists"), py::arg("k"), py::arg("node_limit") = defaults.node_limit,
          py::arg("time_limit") = defaults.time_limit);

    m.def("enumerate_canonical_assignments", [](const Graph& g, std::size_t k) {
        std::vector<Rows> out;
        for (const auto& l : enumerate_canonical_assignments(g, k)) out.push_back(l.lists());
        return out;
    });
    m.def("find_bad_assignment", [](const Graph& g, std::size_t k) -> py::object {
        auto r = find_bad_assignment(g, k);
        if (r.is_exhausted()) throw SearchExhausted("find_bad_assignment: budget exhausted");
        return r.value ? py::cast(r.value->lists()) : py::none();
    });
    m.def("chromatic_number", [](const Graph& g) { return chromatic_number(g); });
    m.def("list_chromatic_number", [](const Graph& g, std::size_t k_max) { return certificate(list_chromatic_number(g, k_max)); },
          py::arg("g"), py::arg("k_max") = 4);
    m.def("list_packing_number", [](const Graph& g, std::size_t k_max) { return certificate(list_packing_number(g, k_max)); },
          py::arg("g"), py::arg("k_max") = 4);

#ifdef LISTPACK_VERSION
    m.attr("__version__") = LISTPACK_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
