#include "thetaring/witnesses.hpp"

#include "thetaring/error.hpp"

#include <algorithm>

namespace thetaring {

namespace {

    struct ArcSpec {
        std::string name;
        std::string tail;
        std::string head;
        // Path variable this edge belongs to; defaults to the edge name.
        std::string variable = {};
    };

    using Side = std::vector<std::string>;

    OrientedWitness build(std::string name, std::vector<std::string> vertex_names, const std::vector<ArcSpec> & arcs,
        std::vector<std::pair<Side, Side>> equations, int expected_height)
    {
        auto id = [&](const std::string & v) {
            auto it = std::find(vertex_names.begin(), vertex_names.end(), v);
            if (it == vertex_names.end())
                throw GraphError("unknown vertex " + v);
            return static_cast<Vertex>(it - vertex_names.begin());
        };
        std::vector<Edge> edges;
        for (const auto & a : arcs)
            edges.push_back({std::min(id(a.tail), id(a.head)), std::max(id(a.tail), id(a.head))});
        Graph g(static_cast<int>(vertex_names.size()), edges);

        OrientedWitness w;
        w.name = std::move(name);
        w.edge_names.resize(arcs.size());
        std::vector<Arc> oriented(arcs.size());
        for (const auto & a : arcs) {
            int e = g.edge_index(id(a.tail), id(a.head));
            oriented[e] = {id(a.tail), id(a.head)};
            w.edge_names[e] = a.name;
            w.variables[a.variable.empty() ? a.name : a.variable].push_back(e);
        }
        w.vertex_names = std::move(vertex_names);
        w.digraph = OrientedGraph(g, oriented);
        w.equations = std::move(equations);
        w.expected_height = expected_height;
        return w;
    }

} // namespace

Binomial OrientedWitness::equation(std::size_t i) const
{
    int q = digraph.size();
    auto side = [&](const Side & names) {
        Exponents e(q, 0);
        for (const auto & n : names)
            for (int edge : variables.at(n))
                ++e[edge];
        return e;
    };
    const auto & [lhs, rhs] = equations.at(i);
    return {side(lhs), side(rhs)};
}

std::vector<Binomial> OrientedWitness::equation_binomials() const
{
    std::vector<Binomial> out;
    for (std::size_t i = 0; i < equations.size(); ++i)
        out.push_back(equation(i));
    return out;
}

OrientedWitness oriented_theta()
{
    return build("theta", {"x", "y", "a", "b", "c"},
        {
            {"L1", "x", "a"},
            {"L2", "y", "a"},
            {"L3", "x", "b"},
            {"L4", "y", "b"},
            {"L5", "x", "c"},
            {"L6", "y", "c"},
        },
        {
            {{"L1", "L4"}, {"L2", "L3"}},
            {{"L3", "L6"}, {"L4", "L5"}},
            {{"L1", "L6"}, {"L2", "L5"}},
        },
        2);
}

OrientedWitness oriented_partial_wheel3()
{
    return build("pw3", {"O", "A", "B", "C", "D"},
        {
            {"t1", "O", "A"},
            {"t2", "O", "B"},
            {"t3", "O", "C"},
            {"L1", "A", "C"},
            {"L2", "B", "C"},
            {"L3", "B", "D"},
            {"L4", "A", "D"},
        },
        {
            {{"t3"}, {"t1", "L1"}},
            {{"t3"}, {"t2", "L2"}},
            {{"t1", "L4"}, {"t2", "L3"}},
            {{"L1", "L3"}, {"L2", "L4"}},
        },
        3);
}

OrientedWitness oriented_pyramid()
{
    // The partial wheel with its spoke O-A replaced by the two-edge path L2.
    return build("pyramid", {"O", "A", "B", "C", "D", "m"},
        {
            {"L2a", "O", "m", "L2"},
            {"L2b", "m", "A", "L2"},
            {"t1", "B", "C"},
            {"t2", "O", "B"},
            {"t3", "O", "C"},
            {"L1", "A", "C"},
            {"L3", "B", "D"},
            {"L4", "A", "D"},
        },
        {
            {{"t3"}, {"L1", "L2"}},
            {{"t3"}, {"t1", "t2"}},
            {{"L2", "L4"}, {"t2", "L3"}},
            {{"L1", "L3"}, {"t1", "L4"}},
        },
        3);
}

OrientedWitness oriented_prism()
{
    return build("prism", {"P1", "P2", "P3", "P4", "P5", "P6"},
        {
            {"t4", "P1", "P2"},
            {"t5", "P3", "P2"},
            {"t6", "P1", "P3"},
            {"L2", "P2", "P4"},
            {"L3", "P5", "P3"},
            {"t3", "P5", "P4"},
            {"t1", "P5", "P6"},
            {"t2", "P6", "P4"},
            {"L1", "P1", "P6"},
        },
        {
            {{"t4"}, {"t5", "t6"}},
            {{"t3"}, {"t1", "t2"}},
            {{"t3"}, {"L3", "t5", "L2"}},
            {{"t1", "t6"}, {"L1", "L3"}},
            {{"t4", "L2"}, {"t2", "L1"}},
        },
        4);
}

OrientedWitness oriented_wheel(int k)
{
    if (k < 4)
        throw PreconditionError(PreconditionError::Reason::invalid_parameters, "wheel needs at least 4 rim vertices");
    auto x = [](int i) { return "x" + std::to_string(i); };
    auto t = [](int i) { return "t" + std::to_string(i); };
    auto l = [](int i) { return "L" + std::to_string(i); };
    std::vector<std::string> names{"h"};
    for (int i = 1; i <= k; ++i)
        names.push_back(x(i));
    std::vector<ArcSpec> arcs;
    for (int i = 1; i <= k; ++i)
        arcs.push_back({t(i), "h", x(i)});
    for (int i = 1; i <= k - 3; ++i)
        arcs.push_back({l(i), x(i), x(i + 1)});
    arcs.push_back({l(k - 2), x(k - 1), x(k - 2)});
    arcs.push_back({l(k - 1), x(k - 1), x(k)});
    arcs.push_back({l(k), x(1), x(k)});

    std::vector<std::pair<Side, Side>> eqs;
    for (int i = 1; i <= k - 3; ++i)
        eqs.push_back({{t(i + 1)}, {t(i), l(i)}});
    eqs.push_back({{t(k - 2)}, {t(k - 1), l(k - 2)}});
    eqs.push_back({{t(k)}, {t(k - 1), l(k - 1)}});
    eqs.push_back({{t(k)}, {t(1), l(k)}});
    Side rim{l(k - 2), l(k)}, rest;
    for (int i = 1; i <= k - 3; ++i)
        rest.push_back(l(i));
    rest.push_back(l(k - 1));
    eqs.push_back({rim, rest});
    return build("pw" + std::to_string(k), names, arcs, eqs, k);
}

std::vector<OrientedWitness> oriented_witnesses()
{
    return {oriented_theta(), oriented_pyramid(), oriented_prism(), oriented_partial_wheel3(), oriented_wheel(4), oriented_wheel(5)};
}

std::optional<OrientedWitness> oriented_witness(const std::string & name)
{
    if (name == "theta")
        return oriented_theta();
    if (name == "pyramid")
        return oriented_pyramid();
    if (name == "prism")
        return oriented_prism();
    if (name == "pw3")
        return oriented_partial_wheel3();
    if (name.size() > 2 && name.starts_with("pw")) {
        try {
            std::size_t used = 0;
            int k = std::stoi(name.substr(2), &used);
            if (used == name.size() - 2 && k >= 4 && k <= 30)
                return oriented_wheel(k);
        } catch (const std::exception &) {
        }
    }
    return std::nullopt;
}

} // namespace thetaring
