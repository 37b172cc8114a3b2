#include "doctest.h"

#include "thetaring/catalog.hpp"
#include "thetaring/random.hpp"

#include <numeric>
#include <set>

using namespace thetaring;

TEST_CASE("graph counts up to isomorphism")
{
    const int expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n <= 7; ++n)
        CHECK(all_graphs(n).size() == static_cast<std::size_t>(expected[n]));
}

TEST_CASE("bipartite graph counts up to isomorphism")
{
    const int expected[] = {1, 1, 2, 3, 7, 13, 35, 88, 303};
    for (int n = 0; n <= 8; ++n)
        CHECK(all_bipartite_graphs(n).size() == static_cast<std::size_t>(expected[n]));
}

TEST_CASE("canonical form is invariant under relabelling")
{
    Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        int n = rng.uniform(1, 8);
        std::vector<Edge> es;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (rng.coin())
                    es.push_back({u, v});
        Graph g(n, es);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        std::vector<Edge> moved;
        for (auto [u, v] : es)
            moved.push_back({std::min(perm[u], perm[v]), std::max(perm[u], perm[v])});
        Graph h(n, moved);
        CHECK(canonical_key(g) == canonical_key(h));
        CHECK(canonical_form(g).size() == g.size());
    }
}

TEST_CASE("non-isomorphic graphs get different keys")
{
    CHECK(canonical_key(Graph::cycle(6)) != canonical_key(Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})));
    CHECK(canonical_key(Graph::path(4)) != canonical_key(Graph(4, {{0, 1}, {0, 2}, {0, 3}})));
}

TEST_CASE("bipartite test")
{
    CHECK(is_bipartite(Graph::cycle(6)));
    CHECK_FALSE(is_bipartite(Graph::cycle(5)));
    CHECK(is_bipartite(Graph(3)));
}
