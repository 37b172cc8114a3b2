#include "doctest.h"
#include "oracles.hpp"

#include "thetaring/catalog.hpp"
#include "thetaring/error.hpp"
#include "thetaring/random.hpp"
#include "thetaring/theta.hpp"

#include <set>

using namespace thetaring;

namespace {

Graph petersen()
{
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back({i, (i + 1) % 5});
        es.push_back({i, i + 5});
        es.push_back({5 + i, 5 + (i + 2) % 5});
    }
    for (auto & e : es)
        if (e.u > e.v)
            std::swap(e.u, e.v);
    return {10, es};
}

Graph wheel(int k)
{
    std::vector<int> all;
    for (int i = 0; i < k; ++i)
        all.push_back(i);
    return make_theta_partial_wheel(k, all);
}

std::vector<Graph> graphs_up_to(int n)
{
    std::vector<Graph> out;
    for (int m = 0; m <= n; ++m)
        for (auto & g : all_graphs(m))
            out.push_back(std::move(g));
    return out;
}

} // namespace

TEST_CASE("graph construction rejects loops, duplicates and range errors")
{
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), GraphError);
    Graph g(4, {{2, 3}, {0, 1}});
    CHECK(g.edges().front() == Edge{0, 1});
    CHECK(g.edge_index(3, 2) == 1);
    CHECK(g.edge_index(0, 2) == -1);
}

TEST_CASE("induced subgraph")
{
    auto tri = induced_subgraph(Graph::complete(4), std::vector<Vertex>{0, 2, 3});
    CHECK(tri.graph == Graph::complete(3));
    CHECK(tri.original == std::vector<Vertex>{0, 2, 3});

    auto p = induced_subgraph(Graph::cycle(5), std::vector<Vertex>{1, 2, 3});
    CHECK(p.graph == Graph::path(3));

    auto prism_tri = induced_subgraph(make_prism(1, 1, 1), std::vector<Vertex>{3, 4, 5});
    CHECK(prism_tri.graph == Graph::complete(3));

    CHECK_THROWS(induced_subgraph(Graph::cycle(5), std::vector<Vertex>{0, 7}));

    SUBCASE("full vertex set is the identity")
    {
        for (const auto & g : graphs_up_to(5)) {
            std::vector<Vertex> all;
            for (Vertex v = 0; v < g.order(); ++v)
                all.push_back(v);
            CHECK(induced_subgraph(g, all).graph == g);
        }
    }
}

TEST_CASE("blocks")
{
    Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    auto b = blocks(bowtie);
    CHECK(b.blocks.size() == 2);
    CHECK(b.cut_vertices == std::vector<Vertex>{2});

    auto c6 = blocks(Graph::cycle(6));
    CHECK(c6.blocks.size() == 1);
    CHECK(c6.cut_vertices.empty());

    auto p4 = blocks(Graph::path(4));
    CHECK(p4.blocks.size() == 3);
    CHECK(p4.cut_vertices.size() == 2);
    for (const auto & blk : p4.blocks)
        CHECK(blk.trivial);

    SUBCASE("every edge lies in exactly one block")
    {
        for (const auto & g : graphs_up_to(6)) {
            int total = 0;
            for (const auto & blk : blocks(g).blocks)
                total += induced_subgraph(g, blk.vertices).graph.size();
            CHECK(total == g.size());
        }
    }
}

TEST_CASE("chordality and holes")
{
    auto k5 = is_chordal(Graph::complete(5));
    CHECK(k5.chordal);
    CHECK(is_perfect_elimination_order(Graph::complete(5), k5.elimination_order));

    auto c4 = is_chordal(Graph::cycle(4));
    REQUIRE_FALSE(c4.chordal);
    REQUIRE(c4.hole);
    CHECK(c4.hole->length() == 4);

    auto theta = is_chordal(make_theta(2, 2, 2));
    REQUIRE_FALSE(theta.chordal);
    CHECK(theta.hole->length() == 4);
    CHECK(is_chordless_in(*theta.hole, make_theta(2, 2, 2)));

    auto pet = find_hole(petersen());
    REQUIRE(pet);
    CHECK(pet->length() == 5);
    CHECK(is_chordless_in(*pet, petersen()));

    SUBCASE("chordal iff only triangles are chordless, all graphs up to 7 vertices")
    {
        for (const auto & g : graphs_up_to(7)) {
            auto cycles = chordless_cycles(g);
            bool only_triangles = std::all_of(cycles.begin(), cycles.end(), [](const Cycle & c) { return c.length() == 3; });
            auto r = is_chordal(g);
            CHECK(r.chordal == only_triangles);
            CHECK(r.chordal == !find_hole(g).has_value());
            if (r.chordal)
                CHECK(is_perfect_elimination_order(g, r.elimination_order));
            else
                CHECK((r.hole->length() >= 4 && is_chordless_in(*r.hole, g)));
        }
    }
}

TEST_CASE("chordless cycles")
{
    CHECK(chordless_cycles(Graph::complete(4)).size() == 4);
    auto c6 = chordless_cycles(Graph::cycle(6));
    REQUIRE(c6.size() == 1);
    CHECK(c6[0] == Cycle({0, 1, 2, 3, 4, 5}));
    CHECK(chordless_cycles(make_prism(1, 1, 1)).size() == 5);

    SUBCASE("matches subset oracle on all graphs up to 7 vertices")
    {
        for (const auto & g : graphs_up_to(7)) {
            auto cycles = chordless_cycles(g);
            CHECK(static_cast<int>(cycles.size()) == oracle::count_chordless_cycles(g));
            std::set<Cycle> unique(cycles.begin(), cycles.end());
            CHECK(unique.size() == cycles.size());
            for (const auto & c : cycles)
                CHECK(is_chordless_in(c, g));
        }
    }
}

TEST_CASE("cycle canonical form")
{
    CHECK(Cycle({3, 1, 2}) == Cycle({1, 2, 3}));
    CHECK(Cycle({2, 1, 3}) == Cycle({1, 2, 3}));
    CHECK(Cycle({4, 0, 1, 2, 3}).vertices() == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK_THROWS_AS(Cycle({0, 1}), GraphError);
}

TEST_CASE("two disjoint paths to a connected subgraph")
{
    auto w5 = wheel(5);
    auto [l1, l2] = two_disjoint_paths_to(w5, std::vector<Vertex>{1, 2}, 0);
    CHECK(l1.length() == 1);
    CHECK(l2.length() == 1);
    CHECK(std::set<Vertex>{l1.back(), l2.back()} == std::set<Vertex>{1, 2});

    auto c6 = Graph::cycle(6);
    auto [a1, a2] = two_disjoint_paths_to(c6, std::vector<Vertex>{3, 4}, 0);
    CHECK(a1.length() + a2.length() == 5);

    auto prism = make_prism(1, 1, 1);
    auto [p1, p2] = two_disjoint_paths_to(prism, std::vector<Vertex>{0, 1, 2}, 3);
    CHECK(p1.back() != p2.back());

    auto reason = [](auto && f) {
        try {
            f();
        } catch (const PreconditionError & e) {
            return e.reason();
        }
        FAIL("expected a precondition error");
        return PreconditionError::Reason::invalid_parameters;
    };
    CHECK(reason([&] { (void)two_disjoint_paths_to(Graph::path(4), std::vector<Vertex>{0, 1}, 3); })
        == PreconditionError::Reason::not_two_connected);
    CHECK(reason([&] { (void)two_disjoint_paths_to(c6, std::vector<Vertex>{0, 1}, 0); })
        == PreconditionError::Reason::vertex_in_subgraph);
    CHECK(reason([&] { (void)two_disjoint_paths_to(c6, std::vector<Vertex>{1}, 0); })
        == PreconditionError::Reason::subgraph_too_small);
    CHECK(reason([&] { (void)two_disjoint_paths_to(c6, std::vector<Vertex>{1, 3}, 0); })
        == PreconditionError::Reason::subgraph_not_connected);

    SUBCASE("paths meet only at x and touch the subgraph once each")
    {
        Rng rng(11);
        for (const auto & g : graphs_up_to(6)) {
            if (g.order() < 3 || !is_two_connected(g))
                continue;
            for (int trial = 0; trial < 4; ++trial) {
                // A random connected vertex set grown from a random vertex.
                std::vector<Vertex> h{rng.uniform(0, g.order() - 1)};
                int want = rng.uniform(2, g.order() - 1);
                while (static_cast<int>(h.size()) < want) {
                    std::vector<Vertex> frontier;
                    for (Vertex v : h)
                        for (Vertex w : g.neighbors(v))
                            if (std::find(h.begin(), h.end(), w) == h.end())
                                frontier.push_back(w);
                    h.push_back(frontier[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(frontier.size()) - 1))]);
                }
                Vertex x = -1;
                for (Vertex v = 0; v < g.order() && x < 0; ++v)
                    if (std::find(h.begin(), h.end(), v) == h.end())
                        x = v;
                auto [q1, q2] = two_disjoint_paths_to(g, h, x);
                CHECK(is_path_in(q1, g));
                CHECK(is_path_in(q2, g));
                CHECK(q1.front() == x);
                CHECK(q2.front() == x);
                CHECK(q1.back() != q2.back());
                std::set<Vertex> s1(q1.vertices.begin(), q1.vertices.end());
                for (Vertex v : q2.vertices)
                    CHECK((v == x || !s1.count(v)));
                for (const auto * q : {&q1, &q2})
                    for (std::size_t i = 0; i + 1 < q->vertices.size(); ++i)
                        CHECK(std::find(h.begin(), h.end(), q->vertices[i]) == h.end());
            }
        }
    }
}
