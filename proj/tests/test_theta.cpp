#include "doctest.h"
#include "oracles.hpp"

#include "thetaring/catalog.hpp"
#include "thetaring/error.hpp"
#include "thetaring/random.hpp"
#include "thetaring/theta.hpp"

using namespace thetaring;

namespace {

std::vector<Graph> graphs_up_to(int n)
{
    std::vector<Graph> out;
    for (int m = 0; m <= n; ++m)
        for (auto & g : all_graphs(m))
            out.push_back(std::move(g));
    return out;
}

std::vector<Graph> vertex_deleted(const Graph & g)
{
    std::vector<Graph> out;
    for (Vertex skip = 0; skip < g.order(); ++skip) {
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < g.order(); ++v)
            if (v != skip)
                keep.push_back(v);
        out.push_back(induced_subgraph(g, keep).graph);
    }
    return out;
}

Graph k23()
{
    return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

Graph wheel(int k)
{
    std::vector<int> all;
    for (int i = 0; i < k; ++i)
        all.push_back(i);
    return make_theta_partial_wheel(k, all);
}

} // namespace

TEST_CASE("chorded-theta enumeration")
{
    CHECK(enumerate_chorded_thetas(Graph::complete(4)).empty());
    CHECK(enumerate_chorded_thetas(k23()).size() == 1);
    CHECK(enumerate_chorded_thetas(Graph::cycle(6)).empty());

    SUBCASE("count and validity against path oracle")
    {
        for (const auto & g : graphs_up_to(6)) {
            auto all = enumerate_chorded_thetas(g);
            CHECK(static_cast<long long>(all.size()) == oracle::scan_thetas(g).thetas);
            for (const auto & t : all)
                CHECK(is_valid_chorded_theta(t, g));
        }
    }
}

TEST_CASE("make_chorded_theta validates")
{
    Graph g = k23();
    auto t = make_chorded_theta(g, {Path{{0, 2, 1}}, Path{{0, 3, 1}}, Path{{0, 4, 1}}});
    CHECK(t.chords.empty());
    CHECK(t.vertex_count() == 5);
    CHECK_THROWS_AS(make_chorded_theta(g, {Path{{0, 2, 1}}, Path{{0, 2, 1}}, Path{{0, 4, 1}}}), PreconditionError);
    CHECK_THROWS_AS(make_chorded_theta(Graph::complete(4), {Path{{0, 1}}, Path{{0, 2, 1}}, Path{{0, 3, 1}}}), PreconditionError);
}

TEST_CASE("simple chorded-thetas")
{
    auto theta = make_chorded_theta(k23(), {Path{{0, 2, 1}}, Path{{0, 3, 1}}, Path{{0, 4, 1}}});
    CHECK(is_simple_chorded_theta(theta, k23()));

    // Prism triangles {0,1,2} and {3,4,5}; terminals 0 and 4 as in the prism's natural chorded-theta.
    Graph prism = make_prism(1, 1, 1);
    auto natural = make_chorded_theta(prism, {Path{{0, 1, 4}}, Path{{0, 3, 4}}, Path{{0, 2, 5, 4}}});
    CHECK(natural.chords.size() == 2);
    CHECK(is_simple_chorded_theta(natural, prism));
    CHECK(transversal_triangles(natural, prism).empty());

    // Seven vertices: a chord joins two vertices of the long third path.
    Graph g(7, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 6}, {6, 1}, {4, 6}});
    auto t = make_chorded_theta(g, {Path{{0, 2, 1}}, Path{{0, 3, 1}}, Path{{0, 4, 5, 6, 1}}});
    CHECK(t.chords == std::vector<Edge>{{4, 6}});
    CHECK_FALSE(is_simple_chorded_theta(t, g));
}

TEST_CASE("transversal triangles")
{
    auto theta = make_chorded_theta(k23(), {Path{{0, 2, 1}}, Path{{0, 3, 1}}, Path{{0, 4, 1}}});
    CHECK(transversal_triangles(theta, k23()).empty());

    // K5 minus the edge {0,1}.
    std::vector<Edge> es;
    for (int v = 1; v < 5; ++v)
        for (int u = 0; u < v; ++u)
            if (!(u == 0 && v == 1))
                es.push_back({u, v});
    Graph k5e(5, es);
    auto t = make_chorded_theta(k5e, {Path{{0, 2, 1}}, Path{{0, 3, 1}}, Path{{0, 4, 1}}});
    auto tri = transversal_triangles(t, k5e);
    REQUIRE(tri.size() == 1);
    CHECK(tri[0] == std::array<Vertex, 3>{2, 3, 4});
}

TEST_CASE("brute-force theta-ring test on small cases")
{
    auto theta = is_theta_ring_bruteforce(k23());
    CHECK_FALSE(theta.theta_ring);
    REQUIRE(theta.witness);
    CHECK(theta.witness->vertex_set() == std::vector<Vertex>{0, 1, 2, 3, 4});

    Graph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(is_theta_ring_bruteforce(diamond).theta_ring);
    CHECK(is_theta_ring_bruteforce(Graph(0)).theta_ring);
    CHECK_FALSE(is_theta_ring_bruteforce(wheel(4)).theta_ring);
}

TEST_CASE("brute force agrees with the path oracle on every graph up to 7 vertices")
{
    int rejected = 0;
    for (const auto & g : graphs_up_to(7)) {
        auto scan = oracle::scan_thetas(g);
        auto global = is_theta_ring_bruteforce(g, SearchRoute::global);
        auto subset = is_theta_ring_bruteforce(g, SearchRoute::by_subset);
        REQUIRE(global.theta_ring == scan.theta_ring);
        REQUIRE(subset.theta_ring == scan.theta_ring);
        if (scan.theta_ring)
            continue;
        ++rejected;
        const auto & w = *global.witness;
        CHECK(is_valid_chorded_theta(w, g));
        CHECK(transversal_triangles(w, g).empty());
        CHECK(is_simple_chorded_theta(w, g));
        CHECK(w.vertex_set() == scan.min_set);
        CHECK(subset.witness->vertex_set() == scan.min_set);
        if (is_chordal(g).chordal)
            FAIL("chordal graph rejected");
    }
    CHECK(rejected == 3 + 40 + 528);
}

TEST_CASE("search routes agree on random larger graphs")
{
    Rng rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        int n = rng.uniform(8, 12);
        std::vector<Edge> es;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (rng.uniform(0, 99) < 30)
                    es.push_back({u, v});
        Graph g(n, es);
        auto a = is_theta_ring_bruteforce(g, SearchRoute::global);
        auto b = is_theta_ring_bruteforce(g, SearchRoute::by_subset);
        REQUIRE(a.theta_ring == b.theta_ring);
        if (!a.theta_ring)
            CHECK(a.witness->vertex_set() == b.witness->vertex_set());
    }
}

TEST_CASE("family builders")
{
    CHECK(canonical_key(make_theta(2, 2, 2)) == canonical_key(k23()));
    auto prism = make_prism(1, 1, 1);
    CHECK(prism.order() == 6);
    CHECK(prism.size() == 9);
    CHECK(make_pyramid(1, 2, 2).order() == 6);
    CHECK(wheel(4).size() == 8);

    CHECK_THROWS_AS(make_theta(1, 2, 2), PreconditionError);
    CHECK_THROWS_AS(make_prism(0, 1, 1), PreconditionError);
    CHECK_THROWS_AS(make_pyramid(1, 1, 2), PreconditionError);
    CHECK_THROWS_AS(make_theta_partial_wheel(3, std::vector<int>{0, 1, 2}), PreconditionError);
    CHECK_THROWS_AS(make_theta_partial_wheel(5, std::vector<int>{0, 1}), PreconditionError);
    CHECK_THROWS_AS(make_theta_partial_wheel(5, std::vector<int>{0, 7}), PreconditionError);

    for (int a = 2; a <= 4; ++a)
        for (int b = a; b <= 4; ++b)
            for (int c = b; c <= 4; ++c) {
                auto g = make_theta(a, b, c);
                CHECK(is_theta_graph(g));
                CHECK(classify_shape(g) == WitnessKind::theta);
                CHECK_FALSE(is_theta_ring_bruteforce(g).theta_ring);
            }
    for (int a = 1; a <= 3; ++a)
        for (int b = a; b <= 3; ++b)
            for (int c = b; c <= 3; ++c) {
                auto g = make_prism(a, b, c);
                CHECK(is_prism_graph(g));
                CHECK(classify_shape(g) == WitnessKind::prism);
                CHECK_FALSE(is_theta_ring_bruteforce(g).theta_ring);
                if (b >= 2) {
                    auto p = make_pyramid(a, b, c);
                    CHECK(is_pyramid_graph(p));
                    CHECK(classify_shape(p) == WitnessKind::pyramid);
                    CHECK_FALSE(is_theta_ring_bruteforce(p).theta_ring);
                }
            }
    // Two far attachments only give a theta.
    CHECK(classify_shape(make_theta_partial_wheel(5, std::vector<int>{0, 2})) == WitnessKind::theta);
    for (int k = 4; k <= 7; ++k) {
        auto g = make_theta_partial_wheel(k, std::vector<int>{0, 1, 2});
        CHECK(is_theta_partial_wheel_graph(g));
        CHECK(classify_shape(g) == WitnessKind::theta_partial_wheel);
        CHECK_FALSE(is_theta_ring_bruteforce(g).theta_ring);
        CHECK(classify_shape(wheel(k)) == WitnessKind::theta_partial_wheel);
    }
    CHECK(classify_shape(Graph::complete(5)) == WitnessKind::generic_chorded_theta);
}

TEST_CASE("smallest member of each family is a minimal forbidden graph")
{
    for (const auto & g : {make_theta(2, 2, 2), make_prism(1, 1, 1), make_pyramid(1, 2, 2), wheel(4)}) {
        CHECK_FALSE(is_theta_ring_bruteforce(g).theta_ring);
        for (const auto & h : vertex_deleted(g))
            CHECK(is_theta_ring_bruteforce(h).theta_ring);
    }
}

TEST_CASE("forbidden classification")
{
    auto pyr = classify_forbidden(make_pyramid(1, 2, 2));
    REQUIRE(pyr);
    CHECK(pyr->kind == WitnessKind::pyramid);
    CHECK_FALSE(classify_forbidden(Graph::cycle(4)));
    auto prism = classify_forbidden(make_prism(1, 2, 1));
    REQUIRE(prism);
    CHECK(prism->kind == WitnessKind::prism);
    auto w4 = classify_forbidden(wheel(4));
    REQUIRE(w4);
    CHECK(w4->kind == WitnessKind::theta_partial_wheel);

    for (const auto & g : graphs_up_to(7)) {
        auto w = classify_forbidden(g);
        if (w)
            CHECK(w->kind != WitnessKind::generic_chorded_theta);
    }
}

TEST_CASE("large graphs use the subset route")
{
    // A 20-vertex cycle with a theta hanging off it.
    std::vector<Edge> es;
    for (int i = 0; i < 20; ++i)
        es.push_back({std::min(i, (i + 1) % 20), std::max(i, (i + 1) % 20)});
    Graph theta = make_theta(2, 2, 2);
    for (auto [u, v] : theta.edges())
        es.push_back({u + 20, v + 20});
    es.push_back({0, 20});
    Graph g(25, es);
    auto r = is_theta_ring_bruteforce(g);
    REQUIRE_FALSE(r.theta_ring);
    CHECK(r.witness->vertex_set() == std::vector<Vertex>{20, 21, 22, 23, 24});
    CHECK_THROWS_AS((void)is_theta_ring_bruteforce(g, SearchRoute::global), PreconditionError);
}
