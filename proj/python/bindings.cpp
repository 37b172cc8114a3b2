#include "thetaring/catalog.hpp"
#include "thetaring/decompose.hpp"
#include "thetaring/error.hpp"
#include "thetaring/io.hpp"
#include "thetaring/theta.hpp"
#include "thetaring/toric.hpp"
#include "thetaring/witnesses.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace thetaring;

namespace {

py::object to_python(const nlohmann::json & j)
{
    switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
        py::list out;
        for (const auto & v : j)
            out.append(to_python(v));
        return out;
    }
    case nlohmann::json::value_t::object: {
        py::dict out;
        for (const auto & [k, v] : j.items())
            out[py::str(k)] = to_python(v);
        return out;
    }
    default: return py::none();
    }
}

py::dict witness_dict(const ForbiddenWitness & w)
{
    py::dict d;
    d["kind"] = std::string(to_string(w.kind));
    d["vertices"] = w.vertices;
    d["terminals"] = py::make_tuple(w.theta.x, w.theta.y);
    py::list paths;
    for (const auto & p : w.theta.paths)
        paths.append(p.vertices);
    d["paths"] = paths;
    return d;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>> & edges)
{
    std::vector<Edge> es;
    for (auto [u, v] : edges)
        es.push_back({std::min(u, v), std::max(u, v)});
    return {n, es};
}

OrientedGraph orient(const Graph & g, const std::optional<std::vector<std::pair<int, int>>> & arcs)
{
    if (!arcs)
        return OrientedGraph::from_mask(g, 0);
    std::vector<Arc> list(g.size());
    std::vector<char> seen(g.size(), 0);
    for (auto [t, h] : *arcs) {
        int e = g.edge_index(t, h);
        if (e < 0 || seen[e])
            throw GraphError("arcs must orient each edge exactly once");
        seen[e] = 1;
        list[e] = {t, h};
    }
    return {g, list};
}

py::list arcs_list(const OrientedGraph & d)
{
    py::list out;
    for (const auto & a : d.arcs())
        out.append(py::make_tuple(a.tail, a.head));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Theta-ring graph recognition and toric ideal checks";

    auto base = py::register_exception<Error>(m, "ThetaRingError", PyExc_ValueError);
    py::register_exception<UnsupportedOrientation>(m, "UnsupportedOrientation", base.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
        .def_property_readonly("n", &Graph::order)
        .def_property_readonly("m", &Graph::size)
        .def("edges", [](const Graph & g) {
            std::vector<std::pair<int, int>> out;
            for (auto [u, v] : g.edges())
                out.emplace_back(u, v);
            return out;
        })
        .def("neighbors", &Graph::neighbors)
        .def("adjacent", &Graph::adjacent)
        .def("__eq__", [](const Graph & a, const Graph & b) { return a == b; })
        .def("__repr__", [](const Graph & g) { return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")"; });

    m.def("parse_edge_list", [](const std::string & text) { return parse_edge_list(std::string_view(text)); });
    m.def("to_edge_list", &to_edge_list);
    m.def("parse_graph6", [](const std::string & s) { return parse_graph6(s); });
    m.def("to_graph6", &to_graph6);
    m.def("all_graphs", &all_graphs, py::arg("n"));
    m.def("canonical_key", &canonical_key);

    m.def("is_chordal", [](const Graph & g) { return is_chordal(g).chordal; });
    m.def("chordless_cycles", [](const Graph & g) {
        std::vector<std::vector<Vertex>> out;
        for (const auto & c : chordless_cycles(g))
            out.push_back(c.vertices());
        return out;
    });

    m.def("is_theta_ring", [](const Graph & g) { return is_theta_ring_bruteforce(g).theta_ring; },
        "Exhaustive check that every chorded-theta has a transversal triangle");
    m.def("forbidden", [](const Graph & g) -> py::object {
        auto w = classify_forbidden(g);
        return w ? py::object(witness_dict(*w)) : py::object(py::none());
    });
    m.def("recognize", [](const Graph & g) {
        auto r = recognize_theta_ring(g);
        py::dict d;
        d["theta_ring"] = r.theta_ring();
        if (r.tree)
            d["tree"] = to_python(to_json(*r.tree));
        else
            d["witness"] = witness_dict(*r.witness);
        return d;
    });
    m.def("is_ring_graph", &is_ring_graph);

    m.def("make_theta", &make_theta);
    m.def("make_prism", &make_prism);
    m.def("make_pyramid", &make_pyramid);
    m.def("make_theta_partial_wheel",
        [](int k, const std::vector<int> & attachments) { return make_theta_partial_wheel(k, attachments); });

    m.def(
        "toric",
        [](const Graph & g, const std::optional<std::vector<std::pair<int, int>>> & arcs) {
            auto d = orient(g, arcs);
            py::dict out;
            out["height"] = height(d);
            std::vector<std::string> gens;
            for (const auto & b : generating_set(d))
                gens.push_back(to_string(b));
            out["generators"] = gens;
            out["orientation"] = arcs_list(d);
            int mu = minimal_generator_count(d);
            out["mu"] = mu;
            out["is_ci"] = mu == height(d);
            return out;
        },
        py::arg("graph"), py::arg("arcs") = py::none(),
        "Height, chordless-cycle generators and minimal generator count; arcs default to low-to-high");

    m.def(
        "cio_search",
        [](const Graph & g, const std::string & mode, int threads) {
            if (mode != "acyclic_only" && mode != "all_supported")
                throw py::value_error("mode must be acyclic_only or all_supported");
            auto r = cio_search(g, mode == "all_supported" ? CioMode::all_supported : CioMode::acyclic_only, threads);
            py::dict out;
            out["witness_found"] = r.witness_found;
            out["height"] = r.height;
            out["examined"] = r.examined;
            if (r.witness_found) {
                out["mu"] = r.mu;
                out["orientation"] = arcs_list(*r.orientation);
            }
            return out;
        },
        py::arg("graph"), py::arg("mode") = "acyclic_only", py::arg("threads") = 1);

    m.def("witness", [](const std::string & name) {
        auto w = oriented_witness(name);
        if (!w)
            throw GraphError("unknown witness " + name);
        return py::make_tuple(w->digraph.base(), arcs_list(w->digraph));
    });
}
