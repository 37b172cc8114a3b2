#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace thetaring {

using Vertex = int;

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Edges are kept in sorted order; the position of an edge in edges() is its
/// index, which the toric side uses as the variable index t_i. Values are
/// immutable after construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Throws GraphError on self loops, duplicates or out of range endpoints.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);

    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);

    [[nodiscard]] int order() const noexcept { return n_; }
    [[nodiscard]] int size() const noexcept { return static_cast<int>(edges_.size()); }

    [[nodiscard]] const std::vector<Edge> & edges() const noexcept { return edges_; }
    [[nodiscard]] const std::vector<Vertex> & neighbors(Vertex v) const { return adj_.at(v); }
    [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const noexcept
    {
        return u != v && in_range(u) && in_range(v) && index_[static_cast<std::size_t>(u) * n_ + v] >= 0;
    }

    /// Index of edge {u,v} in edges(), or -1.
    [[nodiscard]] int edge_index(Vertex u, Vertex v) const noexcept
    {
        return (u != v && in_range(u) && in_range(v)) ? index_[static_cast<std::size_t>(u) * n_ + v] : -1;
    }

    [[nodiscard]] bool in_range(Vertex v) const noexcept { return v >= 0 && v < n_; }

    /// Connected components, each sorted, ordered by smallest vertex.
    [[nodiscard]] std::vector<std::vector<Vertex>> components() const;
    [[nodiscard]] int component_count() const;
    [[nodiscard]] bool is_connected() const { return component_count() <= 1; }
    [[nodiscard]] bool is_complete() const noexcept { return 2 * size() == n_ * (n_ - 1); }

    /// Neighbourhood rows as 64-bit masks; requires n <= 64.
    [[nodiscard]] std::vector<std::uint64_t> neighbor_masks() const;

    friend bool operator==(const Graph & a, const Graph & b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    void build();

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<int> index_;
};

/// Ordered sequence of distinct vertices, consecutive ones adjacent.
struct Path {
    std::vector<Vertex> vertices;

    [[nodiscard]] std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
    [[nodiscard]] Vertex front() const { return vertices.front(); }
    [[nodiscard]] Vertex back() const { return vertices.back(); }
    /// Vertices strictly between the endpoints.
    [[nodiscard]] std::vector<Vertex> interior() const;

    friend auto operator<=>(const Path &, const Path &) = default;
};

[[nodiscard]] bool is_path_in(const Path & path, const Graph & g);

/// Cycle of length >= 3 stored in canonical form: smallest vertex first, and
/// of the two traversal directions the one whose second vertex is smaller.
class Cycle {
public:
    Cycle() = default;
    explicit Cycle(std::vector<Vertex> vertices);

    [[nodiscard]] const std::vector<Vertex> & vertices() const noexcept { return vertices_; }
    [[nodiscard]] std::size_t length() const noexcept { return vertices_.size(); }
    [[nodiscard]] Vertex operator[](std::size_t i) const { return vertices_[i % vertices_.size()]; }
    [[nodiscard]] bool contains(Vertex v) const;
    /// Edge indices of the cycle in g, in traversal order.
    [[nodiscard]] std::vector<int> edge_indices(const Graph & g) const;

    friend auto operator<=>(const Cycle &, const Cycle &) = default;

private:
    std::vector<Vertex> vertices_;
};

[[nodiscard]] bool is_cycle_in(const Cycle & cycle, const Graph & g);
[[nodiscard]] bool is_chordless_in(const Cycle & cycle, const Graph & g);

struct InducedSubgraph {
    Graph graph;
    /// original[i] is the vertex of the host graph that became vertex i.
    std::vector<Vertex> original;
};

/// Restriction of g to the vertex set s (sorted, duplicates dropped).
[[nodiscard]] InducedSubgraph induced_subgraph(const Graph & g, std::span<const Vertex> s);

struct Block {
    std::vector<Vertex> vertices;
    /// Bridge or isolated vertex.
    bool trivial = false;
};

struct BlockDecomposition {
    std::vector<Block> blocks;
    std::vector<Vertex> cut_vertices;
};

[[nodiscard]] BlockDecomposition blocks(const Graph & g);
[[nodiscard]] bool is_two_connected(const Graph & g);

struct ChordalityResult {
    bool chordal = false;
    /// Perfect elimination ordering when chordal.
    std::vector<Vertex> elimination_order;
    /// Chordless cycle of length >= 4 when not chordal.
    std::optional<Cycle> hole;
};

[[nodiscard]] ChordalityResult is_chordal(const Graph & g);
[[nodiscard]] bool is_perfect_elimination_order(const Graph & g, std::span<const Vertex> order);
[[nodiscard]] std::optional<Cycle> find_hole(const Graph & g);
[[nodiscard]] std::vector<Cycle> chordless_cycles(const Graph & g);
[[nodiscard]] bool is_simplicial(const Graph & g, Vertex v);

/// Two paths from x to the connected induced subgraph on `target` that share
/// only x and end at distinct vertices, each touching `target` only at its end.
/// Requires g 2-connected, |target| >= 2 and x outside target.
[[nodiscard]] std::pair<Path, Path> two_disjoint_paths_to(const Graph & g, std::span<const Vertex> target, Vertex x);

} // namespace thetaring
