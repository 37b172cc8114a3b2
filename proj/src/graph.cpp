#include "thetaring/graph.hpp"

#include "thetaring/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>

namespace thetaring {

Graph::Graph(int n) : n_(n)
{
    if (n < 0)
        throw GraphError("negative vertex count");
    build();
}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n)
{
    if (n < 0)
        throw GraphError("negative vertex count");
    edges_.reserve(edges.size());
    for (auto e : edges) {
        if (e.u == e.v)
            throw GraphError("self loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} out of range");
        if (e.u > e.v)
            std::swap(e.u, e.v);
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw GraphError("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
    build();
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, [&] {
          std::vector<Edge> es;
          for (auto [u, v] : edges)
              es.push_back({u, v});
          return es;
      }())
{
}

void Graph::build()
{
    adj_.assign(n_, {});
    index_.assign(static_cast<std::size_t>(n_) * n_, -1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto [u, v] = edges_[i];
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        index_[static_cast<std::size_t>(u) * n_ + v] = static_cast<int>(i);
        index_[static_cast<std::size_t>(v) * n_ + u] = static_cast<int>(i);
    }
    for (auto & row : adj_)
        std::sort(row.begin(), row.end());
}

Graph Graph::complete(int n)
{
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            es.push_back({u, v});
    return {n, es};
}

Graph Graph::cycle(int n)
{
    if (n < 3)
        throw GraphError("a cycle needs at least 3 vertices");
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        es.push_back({u, (u + 1) % n});
    return {n, es};
}

Graph Graph::path(int n)
{
    std::vector<Edge> es;
    for (int u = 0; u + 1 < n; ++u)
        es.push_back({u, u + 1});
    return {n, es};
}

std::vector<std::vector<Vertex>> Graph::components() const
{
    std::vector<std::vector<Vertex>> result;
    std::vector<bool> seen(n_, false);
    for (Vertex s = 0; s < n_; ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> comp{s};
        seen[s] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex w : adj_[comp[i]])
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

int Graph::component_count() const
{
    return static_cast<int>(components().size());
}

std::vector<std::uint64_t> Graph::neighbor_masks() const
{
    if (n_ > 64)
        throw PreconditionError(PreconditionError::Reason::too_large, "bit-parallel routines support at most 64 vertices");
    std::vector<std::uint64_t> masks(n_, 0);
    for (auto [u, v] : edges_) {
        masks[u] |= std::uint64_t{1} << v;
        masks[v] |= std::uint64_t{1} << u;
    }
    return masks;
}

std::vector<Vertex> Path::interior() const
{
    if (vertices.size() <= 2)
        return {};
    return {vertices.begin() + 1, vertices.end() - 1};
}

bool is_path_in(const Path & path, const Graph & g)
{
    if (path.vertices.empty())
        return false;
    std::vector<bool> seen(g.order(), false);
    for (std::size_t i = 0; i < path.vertices.size(); ++i) {
        Vertex v = path.vertices[i];
        if (!g.in_range(v) || seen[v])
            return false;
        seen[v] = true;
        if (i > 0 && !g.adjacent(path.vertices[i - 1], v))
            return false;
    }
    return true;
}

Cycle::Cycle(std::vector<Vertex> vertices) : vertices_(std::move(vertices))
{
    if (vertices_.size() < 3)
        throw GraphError("a cycle needs at least 3 vertices");
    auto smallest = std::min_element(vertices_.begin(), vertices_.end());
    std::rotate(vertices_.begin(), smallest, vertices_.end());
    if (vertices_[1] > vertices_.back())
        std::reverse(vertices_.begin() + 1, vertices_.end());
}

bool Cycle::contains(Vertex v) const
{
    return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

std::vector<int> Cycle::edge_indices(const Graph & g) const
{
    std::vector<int> out;
    out.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        out.push_back(g.edge_index(vertices_[i], (*this)[i + 1]));
    return out;
}

bool is_cycle_in(const Cycle & cycle, const Graph & g)
{
    const auto & vs = cycle.vertices();
    if (vs.size() < 3)
        return false;
    std::vector<bool> seen(g.order(), false);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!g.in_range(vs[i]) || seen[vs[i]])
            return false;
        seen[vs[i]] = true;
        if (!g.adjacent(vs[i], cycle[i + 1]))
            return false;
    }
    return true;
}

bool is_chordless_in(const Cycle & cycle, const Graph & g)
{
    if (!is_cycle_in(cycle, g))
        return false;
    const auto & vs = cycle.vertices();
    std::size_t k = vs.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1)
                continue;
            if (g.adjacent(vs[i], vs[j]))
                return false;
        }
    return true;
}

InducedSubgraph induced_subgraph(const Graph & g, std::span<const Vertex> s)
{
    std::vector<Vertex> original(s.begin(), s.end());
    std::sort(original.begin(), original.end());
    original.erase(std::unique(original.begin(), original.end()), original.end());
    std::vector<int> local(g.order(), -1);
    for (std::size_t i = 0; i < original.size(); ++i) {
        if (!g.in_range(original[i]))
            throw GraphError("vertex " + std::to_string(original[i]) + " out of range");
        local[original[i]] = static_cast<int>(i);
    }
    std::vector<Edge> es;
    for (auto [u, v] : g.edges())
        if (local[u] >= 0 && local[v] >= 0)
            es.push_back({local[u], local[v]});
    return {Graph(static_cast<int>(original.size()), es), std::move(original)};
}

BlockDecomposition blocks(const Graph & g)
{
    int n = g.order();
    BlockDecomposition result;
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> stack;
    int timer = 0;

    std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
        disc[v] = low[v] = timer++;
        for (Vertex w : g.neighbors(v)) {
            if (w == parent)
                continue;
            if (disc[w] < 0) {
                stack.push_back({v, w});
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    std::vector<Vertex> vs;
                    Edge e;
                    do {
                        e = stack.back();
                        stack.pop_back();
                        vs.push_back(e.u);
                        vs.push_back(e.v);
                    } while (!(e.u == v && e.v == w));
                    std::sort(vs.begin(), vs.end());
                    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
                    bool trivial = vs.size() == 2;
                    result.blocks.push_back({std::move(vs), trivial});
                }
            }
            else if (disc[w] < disc[v]) {
                stack.push_back({v, w});
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };

    for (Vertex v = 0; v < n; ++v) {
        if (disc[v] >= 0)
            continue;
        if (g.degree(v) == 0) {
            disc[v] = timer++;
            result.blocks.push_back({{v}, true});
            continue;
        }
        dfs(v, -1);
    }

    std::vector<int> count(n, 0);
    for (const auto & b : result.blocks)
        for (Vertex v : b.vertices)
            ++count[v];
    for (Vertex v = 0; v < n; ++v)
        if (count[v] > 1)
            result.cut_vertices.push_back(v);
    std::sort(result.blocks.begin(), result.blocks.end(),
        [](const Block & a, const Block & b) { return a.vertices < b.vertices; });
    return result;
}

bool is_two_connected(const Graph & g)
{
    if (g.order() < 3)
        return false;
    auto bd = blocks(g);
    return bd.blocks.size() == 1 && !bd.blocks.front().trivial;
}

bool is_simplicial(const Graph & g, Vertex v)
{
    const auto & nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!g.adjacent(nb[i], nb[j]))
                return false;
    return true;
}

bool is_perfect_elimination_order(const Graph & g, std::span<const Vertex> order)
{
    int n = g.order();
    if (static_cast<int>(order.size()) != n)
        return false;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (!g.in_range(order[i]) || pos[order[i]] >= 0)
            return false;
        pos[order[i]] = i;
    }
    for (int i = 0; i < n; ++i) {
        std::vector<Vertex> later;
        for (Vertex w : g.neighbors(order[i]))
            if (pos[w] > i)
                later.push_back(w);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                if (!g.adjacent(later[a], later[b]))
                    return false;
    }
    return true;
}

std::optional<Cycle> find_hole(const Graph & g)
{
    int n = g.order();
    for (Vertex b = 0; b < n; ++b) {
        const auto & nb = g.neighbors(b);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                Vertex a = nb[i], c = nb[j];
                if (g.adjacent(a, c))
                    continue;
                // Shortest a-c path avoiding b's closed neighbourhood closes a hole through b.
                std::vector<bool> blocked(n, false);
                blocked[b] = true;
                for (Vertex w : nb)
                    blocked[w] = true;
                blocked[a] = blocked[c] = false;
                std::vector<int> parent(n, -2);
                std::deque<Vertex> queue{a};
                parent[a] = -1;
                while (!queue.empty() && parent[c] == -2) {
                    Vertex v = queue.front();
                    queue.pop_front();
                    for (Vertex w : g.neighbors(v))
                        if (!blocked[w] && parent[w] == -2) {
                            parent[w] = v;
                            queue.push_back(w);
                        }
                }
                if (parent[c] == -2)
                    continue;
                std::vector<Vertex> cyc{b};
                std::vector<Vertex> p;
                for (Vertex v = c; v != -1; v = parent[v])
                    p.push_back(v);
                std::reverse(p.begin(), p.end());
                cyc.insert(cyc.end(), p.begin(), p.end());
                return Cycle(std::move(cyc));
            }
    }
    return std::nullopt;
}

ChordalityResult is_chordal(const Graph & g)
{
    int n = g.order();
    ChordalityResult result;
    std::vector<bool> removed(n, false);
    auto simplicial_in_rest = [&](Vertex v) {
        std::vector<Vertex> nb;
        for (Vertex w : g.neighbors(v))
            if (!removed[w])
                nb.push_back(w);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!g.adjacent(nb[i], nb[j]))
                    return false;
        return true;
    };
    for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n && pick < 0; ++v)
            if (!removed[v] && simplicial_in_rest(v))
                pick = v;
        if (pick < 0) {
            result.chordal = false;
            result.elimination_order.clear();
            result.hole = find_hole(g);
            return result;
        }
        removed[pick] = true;
        result.elimination_order.push_back(pick);
    }
    result.chordal = true;
    return result;
}

std::vector<Cycle> chordless_cycles(const Graph & g)
{
    int n = g.order();
    std::vector<Cycle> result;
    std::vector<Vertex> path;
    std::vector<bool> on_path(n, false);

    // path[0] is the smallest vertex of every cycle grown from it.
    std::function<void()> extend = [&] {
        Vertex s = path.front();
        Vertex last = path.back();
        for (Vertex w : g.neighbors(last)) {
            if (w <= s || on_path[w])
                continue;
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i)
                chord = g.adjacent(w, path[i]);
            if (chord)
                continue;
            if (g.adjacent(w, s)) {
                if (path[1] < w) {
                    auto vs = path;
                    vs.push_back(w);
                    result.emplace_back(std::move(vs));
                }
                continue;
            }
            path.push_back(w);
            on_path[w] = true;
            extend();
            on_path[w] = false;
            path.pop_back();
        }
    };

    for (Vertex s = 0; s < n; ++s)
        for (Vertex v1 : g.neighbors(s)) {
            if (v1 <= s)
                continue;
            path = {s, v1};
            on_path[s] = on_path[v1] = true;
            extend();
            on_path[s] = on_path[v1] = false;
        }
    std::sort(result.begin(), result.end());
    return result;
}

std::pair<Path, Path> two_disjoint_paths_to(const Graph & g, std::span<const Vertex> target, Vertex x)
{
    using Reason = PreconditionError::Reason;
    int n = g.order();
    if (!g.in_range(x))
        throw GraphError("vertex " + std::to_string(x) + " out of range");
    std::vector<bool> in_target(n, false);
    for (Vertex v : target) {
        if (!g.in_range(v))
            throw GraphError("vertex " + std::to_string(v) + " out of range");
        in_target[v] = true;
    }
    if (in_target[x])
        throw PreconditionError(Reason::vertex_in_subgraph, "x lies inside the target subgraph");
    if (std::count(in_target.begin(), in_target.end(), true) < 2)
        throw PreconditionError(Reason::subgraph_too_small, "target subgraph needs at least two vertices");
    if (!induced_subgraph(g, target).graph.is_connected())
        throw PreconditionError(Reason::subgraph_not_connected, "target subgraph is not connected");
    if (!is_two_connected(g))
        throw PreconditionError(Reason::not_two_connected, "graph is not 2-connected");

    // Vertex-split unit-capacity flow from x to a sink joined to every target vertex.
    int nodes = 2 * n + 1;
    int sink = 2 * n;
    auto in = [](Vertex v) { return 2 * v; };
    auto out = [](Vertex v) { return 2 * v + 1; };
    std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
    for (Vertex v = 0; v < n; ++v) {
        if (in_target[v])
            cap[in(v)][sink] = 1;
        else if (v != x)
            cap[in(v)][out(v)] = 1;
    }
    for (auto [u, v] : g.edges()) {
        if (!in_target[u] && v != x)
            cap[out(u)][in(v)] = 1;
        if (!in_target[v] && u != x)
            cap[out(v)][in(u)] = 1;
    }
    auto flow = cap;
    for (auto & row : flow)
        std::fill(row.begin(), row.end(), 0);

    int source = out(x);
    for (int round = 0; round < 2; ++round) {
        std::vector<int> parent(nodes, -1);
        parent[source] = source;
        std::deque<int> queue{source};
        while (!queue.empty() && parent[sink] < 0) {
            int a = queue.front();
            queue.pop_front();
            for (int b = 0; b < nodes; ++b)
                if (parent[b] < 0 && cap[a][b] - flow[a][b] > 0) {
                    parent[b] = a;
                    queue.push_back(b);
                }
        }
        if (parent[sink] < 0)
            throw PreconditionError(Reason::not_two_connected, "fewer than two disjoint paths exist");
        for (int b = sink; b != source; b = parent[b]) {
            int a = parent[b];
            flow[a][b] += 1;
            flow[b][a] -= 1;
        }
    }

    std::vector<Path> paths;
    for (int round = 0; round < 2; ++round) {
        Path p{{x}};
        int node = source;
        while (true) {
            int next = -1;
            for (int b = 0; b < nodes && next < 0; ++b)
                if (flow[node][b] > 0)
                    next = b;
            flow[node][next] -= 1;
            if (next == sink)
                break;
            Vertex v = next / 2;
            if (next % 2 == 0)
                p.vertices.push_back(v);
            node = next;
        }
        paths.push_back(std::move(p));
    }
    return {paths[0], paths[1]};
}

} // namespace thetaring
