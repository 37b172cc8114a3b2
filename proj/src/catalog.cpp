#include "thetaring/catalog.hpp"

#include "thetaring/error.hpp"
#include "thetaring/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>

namespace thetaring {

namespace {

    using Colors = std::vector<int>;

    // Equitable refinement: a vertex's new colour ranks (colour, sorted neighbour colours).
    void refine(const Graph & g, Colors & colors)
    {
        int n = g.order();
        std::size_t classes = std::set<int>(colors.begin(), colors.end()).size();
        while (true) {
            std::vector<std::pair<int, std::vector<int>>> sig(n);
            for (Vertex v = 0; v < n; ++v) {
                sig[v].first = colors[v];
                for (Vertex w : g.neighbors(v))
                    sig[v].second.push_back(colors[w]);
                std::sort(sig[v].second.begin(), sig[v].second.end());
            }
            auto sorted = sig;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            for (Vertex v = 0; v < n; ++v)
                colors[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
            if (sorted.size() == classes)
                return;
            classes = sorted.size();
        }
    }

    std::string adjacency_string(const Graph & g, const Colors & label)
    {
        int n = g.order();
        std::vector<Vertex> at(n);
        for (Vertex v = 0; v < n; ++v)
            at[label[v]] = v;
        std::string s;
        s.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                s.push_back(g.adjacent(at[i], at[j]) ? '1' : '0');
        return s;
    }

    void search(const Graph & g, Colors colors, std::optional<std::string> & best, Colors & best_label)
    {
        refine(g, colors);
        int n = g.order();
        std::map<int, std::vector<Vertex>> cells;
        for (Vertex v = 0; v < n; ++v)
            cells[colors[v]].push_back(v);
        const std::vector<Vertex> * target = nullptr;
        for (const auto & [c, members] : cells)
            if (members.size() > 1) {
                target = &members;
                break;
            }
        if (!target) {
            auto s = adjacency_string(g, colors);
            if (!best || s < *best) {
                best = s;
                best_label = colors;
            }
            return;
        }
        for (Vertex v : *target) {
            Colors next(n);
            for (Vertex u = 0; u < n; ++u)
                next[u] = 2 * colors[u] + 1;
            next[v] = 2 * colors[v];
            search(g, next, best, best_label);
        }
    }

    template <typename Keep>
    std::vector<Graph> augment_levels(int n, Keep keep)
    {
        if (n < 0)
            throw PreconditionError(PreconditionError::Reason::invalid_parameters, "negative vertex count");
        if (n > 10)
            throw PreconditionError(PreconditionError::Reason::too_large, "exhaustive enumeration supports n <= 10");
        std::vector<Graph> level{Graph(0)};
        for (int m = 1; m <= n; ++m) {
            std::map<std::string, Graph> next;
            for (const auto & g : level) {
                for (std::uint32_t s = 0; s < (std::uint32_t{1} << (m - 1)); ++s) {
                    std::vector<Edge> es = g.edges();
                    for (int v = 0; v < m - 1; ++v)
                        if ((s >> v) & 1)
                            es.push_back({v, m - 1});
                    Graph h(m, es);
                    if (!keep(h))
                        continue;
                    auto c = canonical_form(h);
                    next.emplace(to_graph6(c), std::move(c));
                }
            }
            level.clear();
            for (auto & [key, g] : next)
                level.push_back(std::move(g));
        }
        return level;
    }

} // namespace

Graph canonical_form(const Graph & g)
{
    int n = g.order();
    if (n == 0)
        return g;
    Colors start(n);
    for (Vertex v = 0; v < n; ++v)
        start[v] = g.degree(v);
    std::optional<std::string> best;
    Colors label;
    search(g, start, best, label);
    std::vector<Edge> es;
    for (auto [u, v] : g.edges())
        es.push_back({std::min(label[u], label[v]), std::max(label[u], label[v])});
    return {n, es};
}

std::string canonical_key(const Graph & g)
{
    return to_graph6(canonical_form(g));
}

bool is_bipartite(const Graph & g)
{
    std::vector<int> side(g.order(), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<Graph> all_graphs(int n)
{
    return augment_levels(n, [](const Graph &) { return true; });
}

std::vector<Graph> all_bipartite_graphs(int n)
{
    return augment_levels(n, [](const Graph & g) { return is_bipartite(g); });
}

std::vector<Graph> read_graph6_catalog(const std::filesystem::path & path)
{
    std::ifstream in(path);
    if (!in)
        throw GraphError("cannot open " + path.string());
    std::vector<Graph> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos || line.front() == '#')
            continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const GraphError & e) {
            throw ParseError(lineno, e.what());
        }
    }
    return out;
}

} // namespace thetaring
