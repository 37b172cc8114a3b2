#include "thetaring/random.hpp"

#include "thetaring/decompose.hpp"
#include "thetaring/error.hpp"

#include <algorithm>
#include <numeric>

namespace thetaring {

int Rng::uniform(int lo, int hi)
{
    if (hi < lo)
        throw PreconditionError(PreconditionError::Reason::invalid_parameters, "empty range");
    auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
    // Rejection keeps the reduction unbiased.
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t r;
    do
        r = engine_();
    while (r >= limit);
    return static_cast<int>(lo + static_cast<std::int64_t>(r % span));
}

std::vector<std::vector<Vertex>> cliques_of_size(const Graph & g, int k)
{
    std::vector<std::vector<Vertex>> out;
    if (k < 0)
        return out;
    std::vector<Vertex> cur;
    auto extend = [&](auto && self, Vertex from) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (Vertex v = from; v < g.order(); ++v) {
            if (std::all_of(cur.begin(), cur.end(), [&](Vertex u) { return g.adjacent(u, v); })) {
                cur.push_back(v);
                self(self, v + 1);
                cur.pop_back();
            }
        }
    };
    extend(extend, 0);
    return out;
}

RandomCliqueSum random_clique_sum(Rng & rng, const Graph & g1, const Graph & g2, int max_k)
{
    int k = rng.uniform(0, std::max(0, std::min({max_k, g1.order(), g2.order()})));
    std::vector<std::vector<Vertex>> c1, c2;
    // Fall back to smaller k until both operands have a clique of that size.
    for (; k > 0; --k) {
        c1 = cliques_of_size(g1, k);
        c2 = cliques_of_size(g2, k);
        if (!c1.empty() && !c2.empty())
            break;
    }
    RandomCliqueSum out;
    if (k > 0) {
        auto a = c1[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(c1.size()) - 1))];
        auto b = c2[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(c2.size()) - 1))];
        rng.shuffle(b);
        for (int i = 0; i < k; ++i)
            out.identify.push_back({a[i], b[i]});
    }
    out.result = clique_sum(g1, g2, out.identify);
    return out;
}

Graph random_piece(Rng & rng)
{
    return rng.coin() ? Graph::complete(rng.uniform(1, 5)) : Graph::cycle(rng.uniform(3, 7));
}

Graph random_theta_ring(Rng & rng, int pieces)
{
    Graph g = random_piece(rng);
    for (int i = 1; i < pieces; ++i)
        g = random_clique_sum(rng, g, random_piece(rng)).result;
    return g;
}

Graph random_chordal(Rng & rng, int n)
{
    std::vector<Edge> edges;
    Graph g(0);
    for (int v = 0; v < n; ++v) {
        std::vector<Vertex> clique;
        if (v > 0 && rng.uniform(0, 9) > 0) {
            std::vector<Vertex> candidates{rng.uniform(0, v - 1)};
            while (!candidates.empty()) {
                Vertex pick = candidates[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(candidates.size()) - 1))];
                clique.push_back(pick);
                candidates.clear();
                for (Vertex w = 0; w < v; ++w)
                    if (std::find(clique.begin(), clique.end(), w) == clique.end()
                        && std::all_of(clique.begin(), clique.end(), [&](Vertex u) { return g.adjacent(u, w); }))
                        candidates.push_back(w);
                if (rng.uniform(0, 2) == 0)
                    break;
            }
        }
        for (Vertex u : clique)
            edges.push_back({u, v});
        g = Graph(v + 1, edges);
    }
    return g;
}

OrientedGraph random_orientation(Rng & rng, const Graph & g)
{
    std::vector<Arc> arcs;
    for (auto [u, v] : g.edges())
        arcs.push_back(rng.coin() ? Arc{u, v} : Arc{v, u});
    return {g, arcs};
}

OrientedGraph random_acyclic_orientation(Rng & rng, const Graph & g)
{
    std::vector<int> rank(g.order());
    std::iota(rank.begin(), rank.end(), 0);
    rng.shuffle(rank);
    std::vector<Arc> arcs;
    for (auto [u, v] : g.edges())
        arcs.push_back(rank[u] < rank[v] ? Arc{u, v} : Arc{v, u});
    return {g, arcs};
}

} // namespace thetaring
