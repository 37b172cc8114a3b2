#pragma once

#include "thetaring/graph.hpp"
#include "thetaring/toric.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace thetaring {

/// Seeded generator whose draws are identical across standard libraries
/// (std distributions are not portable, so ranges are reduced by hand).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [lo, hi].
    int uniform(int lo, int hi);
    bool coin() { return (engine_() >> 63) != 0; }
    template <typename T>
    void shuffle(std::vector<T> & v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<int>(i) - 1))]);
    }

private:
    std::mt19937_64 engine_;
};

/// All cliques of exactly k vertices, each sorted, in lexicographic order.
[[nodiscard]] std::vector<std::vector<Vertex>> cliques_of_size(const Graph & g, int k);

struct RandomCliqueSum {
    Graph result;
    /// Pairs (vertex of the first operand, vertex of the second).
    std::vector<std::pair<Vertex, Vertex>> identify;
};

/// Glues g2 onto g1 along a random common clique of random size k <= max_k.
[[nodiscard]] RandomCliqueSum random_clique_sum(Rng & rng, const Graph & g1, const Graph & g2, int max_k = 3);

/// A complete graph on 1..5 vertices or a cycle on 3..7 vertices.
[[nodiscard]] Graph random_piece(Rng & rng);
/// Clique-sum of `pieces` random pieces.
[[nodiscard]] Graph random_theta_ring(Rng & rng, int pieces);
/// Each new vertex joins a random clique of the graph so far.
[[nodiscard]] Graph random_chordal(Rng & rng, int n);

[[nodiscard]] OrientedGraph random_orientation(Rng & rng, const Graph & g);
/// Orients every edge along a random vertex ranking.
[[nodiscard]] OrientedGraph random_acyclic_orientation(Rng & rng, const Graph & g);

} // namespace thetaring
