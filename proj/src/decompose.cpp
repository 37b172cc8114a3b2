#include "thetaring/decompose.hpp"

#include "thetaring/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace thetaring {

namespace {

    using Reason = PreconditionError::Reason;

    bool is_clique(const Graph & g, std::span<const Vertex> vs)
    {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (!g.adjacent(vs[i], vs[j]))
                    return false;
        return true;
    }

    void relabel(DecompositionTree & t, std::span<const Vertex> map)
    {
        for (auto & node : t.nodes) {
            for (auto & v : node.vertices)
                v = map[v];
            for (auto & v : node.shared)
                v = map[v];
            std::sort(node.shared.begin(), node.shared.end());
            if (node.leaf && node.kind == LeafKind::complete)
                std::sort(node.vertices.begin(), node.vertices.end());
            else if (node.leaf)
                node.vertices = Cycle(node.vertices).vertices();
        }
    }

    int build_chordal(const Graph & g, const std::vector<Vertex> & alive, DecompositionTree & t)
    {
        if (is_clique(g, alive))
            return t.add_leaf(LeafKind::complete, alive);
        std::vector<char> in(g.order(), 0);
        for (Vertex v : alive)
            in[v] = 1;
        auto alive_nbrs = [&](Vertex v) {
            std::vector<Vertex> out;
            for (Vertex w : g.neighbors(v))
                if (in[w])
                    out.push_back(w);
            return out;
        };
        Vertex simplicial = -1;
        for (Vertex v : alive)
            if (is_clique(g, alive_nbrs(v))) {
                simplicial = v;
                break;
            }
        if (simplicial < 0)
            throw PreconditionError(Reason::not_chordal, "graph has no simplicial vertex");

        auto q = alive_nbrs(simplicial);
        q.push_back(simplicial);
        std::sort(q.begin(), q.end());
        std::vector<char> in_q(g.order(), 0);
        for (Vertex v : q)
            in_q[v] = 1;
        std::vector<Vertex> shared, rest;
        std::vector<char> removed(g.order(), 0);
        for (Vertex u : q) {
            auto nb = alive_nbrs(u);
            removed[u] = std::all_of(nb.begin(), nb.end(), [&](Vertex w) { return in_q[w]; });
            if (!removed[u])
                shared.push_back(u);
        }
        for (Vertex v : alive)
            if (!removed[v])
                rest.push_back(v);
        int left = t.add_leaf(LeafKind::complete, q);
        int right = build_chordal(g, rest, t);
        return t.add_sum(left, right, shared);
    }

    // Tree for one 2-connected graph h in its own labels, or nothing on failure.
    std::optional<DecompositionTree> recognize_block(const Graph & h, std::span<const Vertex> label, RecognitionTrace * trace)
    {
        DecompositionTree t;
        if (h.order() <= 2) {
            std::vector<Vertex> all;
            for (Vertex v = 0; v < h.order(); ++v)
                all.push_back(v);
            t.root = t.add_leaf(LeafKind::complete, all);
            relabel(t, label);
            return t;
        }
        auto chordal = is_chordal(h);
        if (chordal.chordal) {
            t = chordal_clique_tree(h);
            relabel(t, label);
            return t;
        }
        const Cycle & hole = *chordal.hole;
        int len = static_cast<int>(hole.length());
        if (len == h.order()) {
            t.root = t.add_leaf(LeafKind::cycle, hole.vertices());
            relabel(t, label);
            return t;
        }

        std::vector<int> pos(h.order(), -1);
        for (int i = 0; i < len; ++i)
            pos[hole[i]] = i;
        std::vector<Vertex> off;
        for (Vertex v = 0; v < h.order(); ++v)
            if (pos[v] < 0)
                off.push_back(v);
        auto rest = induced_subgraph(h, off);

        std::vector<std::vector<Vertex>> parts(len);
        for (const auto & comp : rest.graph.components()) {
            std::vector<Vertex> k;
            for (Vertex v : comp)
                k.push_back(rest.original[v]);
            std::set<Vertex> rim;
            for (Vertex v : k)
                for (Vertex w : h.neighbors(v))
                    if (pos[w] >= 0)
                        rim.insert(w);
            Vertex x = *std::min_element(k.begin(), k.end());
            std::pair<Path, Path> paths;
            try {
                paths = two_disjoint_paths_to(h, hole.vertices(), x);
            } catch (const PreconditionError &) {
                return std::nullopt;
            }
            std::set<Vertex> ends{paths.first.back(), paths.second.back()};
            if (rim.size() != 2 || rim != ends)
                return std::nullopt;
            int a = pos[*rim.begin()], b = pos[*rim.rbegin()];
            int edge;
            if ((a + 1) % len == b)
                edge = a;
            else if ((b + 1) % len == a)
                edge = b;
            else
                return std::nullopt;
            parts[edge].insert(parts[edge].end(), k.begin(), k.end());
        }

        HoleStep step{Cycle(hole), {}, {}};
        t.root = t.add_leaf(LeafKind::cycle, hole.vertices());
        for (int i = 0; i < len; ++i) {
            if (parts[i].empty())
                continue;
            std::vector<Vertex> piece = parts[i];
            Vertex xi = hole[i], xj = hole[i + 1];
            piece.push_back(xi);
            piece.push_back(xj);
            std::sort(piece.begin(), piece.end());
            std::sort(parts[i].begin(), parts[i].end());
            auto sub = induced_subgraph(h, piece);
            auto sub_tree = recognize_block(sub.graph, sub.original, trace);
            if (!sub_tree)
                return std::nullopt;
            int right = t.graft(*sub_tree);
            t.root = t.add_sum(t.root, right, {std::min(xi, xj), std::max(xi, xj)});
            step.parts.push_back(parts[i]);
            step.pieces.push_back(piece);
        }
        relabel(t, label);
        if (trace) {
            std::vector<Vertex> hv;
            for (Vertex v : hole.vertices())
                hv.push_back(label[v]);
            step.hole = Cycle(hv);
            for (auto & p : step.parts)
                for (auto & v : p)
                    v = label[v];
            for (auto & p : step.pieces)
                for (auto & v : p)
                    v = label[v];
            trace->steps.push_back(std::move(step));
        }
        return t;
    }

    // Block trees of g in an order where each block meets the earlier ones in one cut vertex.
    std::vector<std::vector<Block>> blocks_by_component(const Graph & g)
    {
        auto comps = g.components();
        std::vector<int> comp_of(g.order(), -1);
        for (std::size_t c = 0; c < comps.size(); ++c)
            for (Vertex v : comps[c])
                comp_of[v] = static_cast<int>(c);
        std::vector<std::vector<Block>> grouped(comps.size());
        for (auto & b : blocks(g).blocks)
            grouped[comp_of[b.vertices.front()]].push_back(std::move(b));
        for (auto & list : grouped) {
            std::vector<Block> ordered;
            std::vector<char> used(list.size(), 0), covered(g.order(), 0);
            while (ordered.size() < list.size()) {
                for (std::size_t i = 0; i < list.size(); ++i) {
                    if (used[i])
                        continue;
                    bool touches = ordered.empty()
                        || std::any_of(list[i].vertices.begin(), list[i].vertices.end(), [&](Vertex v) { return covered[v]; });
                    if (!touches)
                        continue;
                    used[i] = 1;
                    for (Vertex v : list[i].vertices)
                        covered[v] = 1;
                    ordered.push_back(list[i]);
                    break;
                }
            }
            list = std::move(ordered);
        }
        return grouped;
    }

    std::vector<Vertex> overlap(const std::set<Vertex> & a, const std::set<Vertex> & b)
    {
        std::vector<Vertex> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    }

    struct Rebuilt {
        std::set<Vertex> vertices;
        std::set<Edge> edges;
    };

    bool has_edge(const Rebuilt & r, Vertex u, Vertex v)
    {
        return r.edges.count({std::min(u, v), std::max(u, v)}) > 0;
    }

    Rebuilt rebuild(const DecompositionTree & t, int index, int depth)
    {
        if (index < 0 || index >= static_cast<int>(t.nodes.size()) || depth > static_cast<int>(t.nodes.size()))
            throw GraphError("decomposition tree has an invalid node reference");
        const auto & node = t.nodes[index];
        Rebuilt r;
        if (node.leaf) {
            r.vertices.insert(node.vertices.begin(), node.vertices.end());
            if (r.vertices.size() != node.vertices.size())
                throw GraphError("leaf repeats a vertex");
            const auto & vs = node.vertices;
            if (node.kind == LeafKind::complete) {
                for (std::size_t i = 0; i < vs.size(); ++i)
                    for (std::size_t j = i + 1; j < vs.size(); ++j)
                        r.edges.insert({std::min(vs[i], vs[j]), std::max(vs[i], vs[j])});
            } else {
                if (vs.size() < 3)
                    throw GraphError("cycle leaf needs at least 3 vertices");
                for (std::size_t i = 0; i < vs.size(); ++i) {
                    Vertex a = vs[i], b = vs[(i + 1) % vs.size()];
                    r.edges.insert({std::min(a, b), std::max(a, b)});
                }
            }
            return r;
        }
        auto left = rebuild(t, node.left, depth + 1);
        auto right = rebuild(t, node.right, depth + 1);
        std::vector<Vertex> shared = node.shared;
        std::sort(shared.begin(), shared.end());
        if (static_cast<int>(shared.size()) != node.k || overlap(left.vertices, right.vertices) != shared)
            throw GraphError("clique-sum node: shared set is not the overlap of its operands");
        for (std::size_t i = 0; i < shared.size(); ++i)
            for (std::size_t j = i + 1; j < shared.size(); ++j)
                if (!has_edge(left, shared[i], shared[j]) || !has_edge(right, shared[i], shared[j]))
                    throw GraphError("clique-sum node: shared set is not a clique in both operands");
        r.vertices = std::move(left.vertices);
        r.vertices.insert(right.vertices.begin(), right.vertices.end());
        r.edges = std::move(left.edges);
        r.edges.insert(right.edges.begin(), right.edges.end());
        return r;
    }

    nlohmann::json node_json(const DecompositionTree & t, int index)
    {
        const auto & node = t.nodes.at(index);
        if (node.leaf)
            return {{"leaf", {{"kind", std::string(to_string(node.kind))}, {"vertices", node.vertices}}}};
        return {{"sum",
            {{"k", node.k}, {"shared", node.shared}, {"left", node_json(t, node.left)}, {"right", node_json(t, node.right)}}}};
    }

    int node_from_json(const nlohmann::json & j, DecompositionTree & t)
    {
        if (j.contains("leaf")) {
            const auto & leaf = j.at("leaf");
            auto kind_name = leaf.at("kind").get<std::string>();
            LeafKind kind;
            if (kind_name == "complete")
                kind = LeafKind::complete;
            else if (kind_name == "cycle")
                kind = LeafKind::cycle;
            else
                throw GraphError("unknown leaf kind " + kind_name);
            return t.add_leaf(kind, leaf.at("vertices").get<std::vector<Vertex>>());
        }
        if (!j.contains("sum"))
            throw GraphError("tree node must be a leaf or a sum");
        const auto & sum = j.at("sum");
        int left = node_from_json(sum.at("left"), t);
        int right = node_from_json(sum.at("right"), t);
        int index = t.add_sum(left, right, sum.at("shared").get<std::vector<Vertex>>());
        if (t.nodes[index].k != sum.at("k").get<int>())
            throw GraphError("sum node k does not match its shared set");
        return index;
    }

} // namespace

std::string_view to_string(LeafKind kind) noexcept
{
    return kind == LeafKind::cycle ? "cycle" : "complete";
}

int DecompositionTree::add_leaf(LeafKind kind, std::vector<Vertex> vertices)
{
    TreeNode node;
    node.leaf = true;
    node.kind = kind;
    node.vertices = std::move(vertices);
    nodes.push_back(std::move(node));
    return static_cast<int>(nodes.size()) - 1;
}

int DecompositionTree::add_sum(int left, int right, std::vector<Vertex> shared)
{
    TreeNode node;
    node.leaf = false;
    node.left = left;
    node.right = right;
    std::sort(shared.begin(), shared.end());
    node.k = static_cast<int>(shared.size());
    node.shared = std::move(shared);
    nodes.push_back(std::move(node));
    return static_cast<int>(nodes.size()) - 1;
}

int DecompositionTree::graft(const DecompositionTree & other)
{
    int offset = static_cast<int>(nodes.size());
    for (auto node : other.nodes) {
        if (!node.leaf) {
            node.left += offset;
            node.right += offset;
        }
        nodes.push_back(std::move(node));
    }
    return other.root + offset;
}

std::size_t DecompositionTree::leaf_count() const
{
    return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const TreeNode & n) { return n.leaf; }));
}

Graph clique_sum(const Graph & g1, const Graph & g2, std::span<const std::pair<Vertex, Vertex>> identify)
{
    std::vector<Vertex> in1, in2;
    std::vector<Vertex> map(g2.order(), -1);
    for (auto [a, b] : identify) {
        if (!g1.in_range(a) || !g2.in_range(b))
            throw PreconditionError(Reason::invalid_parameters, "identified vertex out of range");
        if (map[b] >= 0 || std::find(in1.begin(), in1.end(), a) != in1.end())
            throw PreconditionError(Reason::invalid_parameters, "identification is not injective");
        map[b] = a;
        in1.push_back(a);
        in2.push_back(b);
    }
    if (!is_clique(g1, in1) || !is_clique(g2, in2))
        throw PreconditionError(Reason::not_a_clique, "identified vertices must form a clique in both graphs");
    int next = g1.order();
    for (Vertex v = 0; v < g2.order(); ++v)
        if (map[v] < 0)
            map[v] = next++;
    std::set<Edge> edges(g1.edges().begin(), g1.edges().end());
    for (auto [u, v] : g2.edges())
        edges.insert({std::min(map[u], map[v]), std::max(map[u], map[v])});
    std::vector<Edge> list(edges.begin(), edges.end());
    return {next, list};
}

DecompositionTree chordal_clique_tree(const Graph & g)
{
    auto chordal = is_chordal(g);
    if (!chordal.chordal)
        throw PreconditionError(Reason::not_chordal, "graph has a hole");
    DecompositionTree t;
    std::vector<Vertex> all;
    for (Vertex v = 0; v < g.order(); ++v)
        all.push_back(v);
    t.root = build_chordal(g, all, t);
    return t;
}

Recognition recognize_theta_ring(const Graph & g, RecognitionTrace * trace)
{
    DecompositionTree out;
    bool ok = true;
    int acc = -1;
    auto grouped = blocks_by_component(g);
    for (const auto & comp_blocks : grouped) {
        int comp_root = -1;
        std::set<Vertex> covered;
        for (const auto & b : comp_blocks) {
            auto sub = induced_subgraph(g, b.vertices);
            auto tree = recognize_block(sub.graph, sub.original, trace);
            if (!tree) {
                ok = false;
                break;
            }
            int r = out.graft(*tree);
            if (comp_root < 0) {
                comp_root = r;
            } else {
                std::vector<Vertex> shared;
                for (Vertex v : b.vertices)
                    if (covered.count(v))
                        shared.push_back(v);
                comp_root = out.add_sum(comp_root, r, shared);
            }
            covered.insert(b.vertices.begin(), b.vertices.end());
        }
        if (!ok)
            break;
        acc = acc < 0 ? comp_root : out.add_sum(acc, comp_root, {});
    }

    Recognition result;
    if (ok) {
        out.root = acc < 0 ? out.add_leaf(LeafKind::complete, {}) : acc;
        result.tree = std::move(out);
        return result;
    }
    result.witness = classify_forbidden(g);
    if (!result.witness)
        throw std::logic_error("structural recognizer rejected a graph without a forbidden chorded-theta");
    return result;
}

bool is_ring_graph(const Graph & g)
{
    for (const auto & b : blocks(g).blocks) {
        if (b.trivial)
            continue;
        auto sub = induced_subgraph(g, b.vertices);
        auto tree = recognize_block(sub.graph, sub.original, nullptr);
        if (!tree)
            return false;
        for (const auto & node : tree->nodes) {
            if (node.leaf && node.kind == LeafKind::complete && node.vertices.size() > 3)
                return false;
            if (!node.leaf && node.k != 2)
                return false;
        }
    }
    return true;
}

bool verify_tree(const DecompositionTree & tree, const Graph & g)
{
    auto r = rebuild(tree, tree.root, 0);
    if (static_cast<int>(r.vertices.size()) != g.order())
        return false;
    for (Vertex v : r.vertices)
        if (!g.in_range(v))
            return false;
    return r.edges == std::set<Edge>(g.edges().begin(), g.edges().end());
}

nlohmann::json to_json(const DecompositionTree & tree)
{
    return node_json(tree, tree.root);
}

DecompositionTree tree_from_json(const nlohmann::json & j)
{
    DecompositionTree t;
    t.root = node_from_json(j, t);
    return t;
}

} // namespace thetaring
