#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quadforest/catalog.hpp"
#include "quadforest/discharge.hpp"
#include "quadforest/formats.hpp"
#include "quadforest/generators.hpp"
#include "quadforest/inequality.hpp"
#include "quadforest/reduction.hpp"
#include "quadforest/solver.hpp"

namespace py = pybind11;
using namespace qf;

namespace {

VertexSet to_set(const std::vector<int>& ids) { return VertexSet(ids); }

py::dict cert_dict(const ForestCertificate& c) {
    py::dict d;
    d["vertices"] = c.vertices.ids;
    d["size"] = c.size;
    d["target"] = c.bound_target;
    return d;
}

SolverOptions opts(uint64_t budget) {
    SolverOptions o;
    o.node_budget = budget;
    return o;
}

}  // namespace

PYBIND11_MODULE(_quadforest, m) {
    m.doc() = "exact induced forests, reductions and discharging on bipartite plane graphs";

    py::register_exception<GraphError>(m, "GraphError");

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return Graph::build(n, edges);
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def("edges", &Graph::edges)
        .def("degree", &Graph::degree)
        .def("adjacent", &Graph::adjacent)
        .def("neighbors", &Graph::neighbors)
        .def("is_bipartite", [](const Graph& g) { return g.bipartition(); })
        .def("induces_forest",
             [](const Graph& g, const std::vector<int>& s) {
                 return induces_forest(g, to_set(s));
             })
        .def("delete_vertices",
             [](const Graph& g, const std::vector<int>& s) {
                 return delete_vertices(g, to_set(s));
             })
        .def("identify",
             [](const Graph& g, const std::vector<std::vector<int>>& groups) {
                 std::vector<VertexSet> gs;
                 for (const auto& grp : groups) gs.push_back(to_set(grp));
                 return identify(g, gs);
             })
        .def("with_edge", [](const Graph& g, int u, int v) { return graph_with_edge(g, u, v); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.n()) +
                   " m=" + std::to_string(g.edge_count()) + ">";
        });

    py::class_<PlaneGraph>(m, "PlaneGraph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges,
                         const std::vector<std::vector<int>>& rotation) {
                 return PlaneGraph(Graph::build(n, edges), rotation);
             }),
             py::arg("n"), py::arg("edges"), py::arg("rotation"))
        .def_property_readonly("n", &PlaneGraph::n)
        .def_property_readonly("graph", &PlaneGraph::graph)
        .def("rotation", [](const PlaneGraph& pg) { return pg.rotations(); })
        .def("face_lengths",
             [](const PlaneGraph& pg) {
                 std::vector<int> out;
                 for (const auto& f : trace_faces(pg)) out.push_back(f.length());
                 return out;
             })
        .def("faces",
             [](const PlaneGraph& pg) {
                 std::vector<std::vector<int>> out;
                 for (const auto& f : trace_faces(pg)) out.push_back(f.vertices());
                 return out;
             })
        .def("is_quadrangulation", [](const PlaneGraph& pg) { return is_quadrangulation(pg); })
        .def("cofacial_pairs",
             [](const PlaneGraph& pg, int v) { return cofacial_pairs(pg, v); })
        .def("__repr__", [](const PlaneGraph& pg) {
            return "<PlaneGraph n=" + std::to_string(pg.n()) + ">";
        });

    m.def("bound", &bound, py::arg("n"), "ceil((4n+3)/7)");

    m.def(
        "a_exact",
        [](const Graph& g, uint64_t budget) { return cert_dict(a_exact(g, opts(budget))); },
        py::arg("g"), py::arg("budget") = SolverOptions{}.node_budget);
    m.def("a_bruteforce", [](const Graph& g) { return cert_dict(a_bruteforce(g)); });
    m.def(
        "a_with_forced_vertex",
        [](const Graph& g, int v, uint64_t budget) {
            return cert_dict(a_with_forced_vertex(g, v, opts(budget)));
        },
        py::arg("g"), py::arg("v"), py::arg("budget") = SolverOptions{}.node_budget);

    m.def("bound_holds", [](const Graph& g) {
        auto r = bound_holds(g);
        py::dict d;
        d["n"] = r.n;
        d["a"] = r.a;
        d["target"] = r.target;
        d["ok"] = r.ok;
        d["bipartite"] = r.bipartite;
        return d;
    });

    m.def("parse_graph6", &parse_graph6);
    m.def("emit_graph6", &emit_graph6);
    m.def("parse_planar_code", [](const py::bytes& b) {
        return parse_planar_code(std::string(b));
    });
    m.def("emit_planar_code", [](const std::vector<PlaneGraph>& gs) {
        return py::bytes(emit_planar_code(gs));
    });

    m.def("detect", [](const PlaneGraph& pg) {
        std::vector<std::pair<std::string, std::vector<int>>> out;
        for (const auto& h : detect(pg)) out.emplace_back(to_string(h.tag), h.witness.ids);
        return out;
    });

    m.def("classify_vertex", [](const PlaneGraph& pg, int v) {
        return to_string(classify_vertex(pg, v).label);
    });

    m.def("audit", [](const PlaneGraph& pg) {
        auto rep = audit(pg);
        py::dict d;
        d["connected"] = rep.shape.connected;
        d["quadrangulation"] = rep.shape.quadrangulation;
        d["min_degree_2"] = rep.shape.min_degree_2;
        d["bipartite"] = rep.shape.bipartite;
        d["initial_total_q"] = rep.initial_total_q;
        d["final_total_q"] = rep.final_total_q;
        d["conserved"] = rep.conserved;
        d["negative_vertices"] = rep.negative_vertices;
        d["hits_present"] = rep.hits_present;
        return d;
    });

    m.def("build_forest", [](const PlaneGraph& pg) {
        auto rep = build_forest(pg);
        py::dict d;
        d["certificate"] = cert_dict(rep.certificate);
        d["rules"] = rep.rules;
        d["meets_bound"] = rep.meets_bound;
        d["used_fallback"] = rep.used_fallback;
        return d;
    });

    m.def(
        "check_ineq1",
        [](int range) {
            auto v = check_ineq1(range);
            py::dict d;
            d["pass"] = v.pass;
            d["tuples_checked"] = v.tuples_checked;
            return d;
        },
        py::arg("range") = 200);
    m.def(
        "check_ineq2",
        [](int part, int range) {
            auto v = check_ineq2(part, range);
            py::dict d;
            d["pass"] = v.pass;
            d["tuples_checked"] = v.tuples_checked;
            std::vector<py::dict> exc;
            for (const auto& e : v.exceptions) {
                py::dict one;
                one["residues"] = e.residues;
                one["realized"] = e.realized;
                exc.push_back(one);
            }
            d["exceptions"] = exc;
            return d;
        },
        py::arg("part"), py::arg("range") = 60);

    m.def(
        "generate",
        [](const std::string& family, int size, uint64_t seed) {
            auto fam = family_from_string(family);
            if (!fam) throw GraphError("unknown family: " + family);
            std::vector<PlaneGraph> out;
            for (auto& e : generate_corpus(*fam, size, seed)) out.push_back(e.plane);
            return out;
        },
        py::arg("family"), py::arg("size"), py::arg("seed") = 1);

    m.def("families", [] {
        std::vector<std::string> out;
        for (Family f : all_families()) out.push_back(to_string(f));
        return out;
    });

    m.def("cube", &cube);
    m.def("double_cube_matching", &double_cube_matching);
}
