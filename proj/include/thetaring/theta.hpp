#pragma once

#include "thetaring/graph.hpp"

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace thetaring {

/// Two non-adjacent terminals joined by three internally disjoint paths,
/// together with every other edge of the subgraph they induce (the chords).
struct ChordedTheta {
    Vertex x = 0;
    Vertex y = 0;
    std::array<Path, 3> paths;
    std::vector<Edge> chords;

    /// Sorted vertex set of the induced subgraph.
    [[nodiscard]] std::vector<Vertex> vertex_set() const;
    [[nodiscard]] std::size_t vertex_count() const;

    friend bool operator==(const ChordedTheta &, const ChordedTheta &) = default;
};

/// Validates the three paths in g and fills in the chords.
/// Throws PreconditionError if they do not form a chorded-theta.
[[nodiscard]] ChordedTheta make_chorded_theta(const Graph & g, std::array<Path, 3> paths);
[[nodiscard]] bool is_valid_chorded_theta(const ChordedTheta & t, const Graph & g);

enum class WitnessKind {
    theta,
    prism,
    pyramid,
    theta_partial_wheel,
    generic_chorded_theta,
};

[[nodiscard]] std::string_view to_string(WitnessKind kind) noexcept;

struct ForbiddenWitness {
    WitnessKind kind = WitnessKind::generic_chorded_theta;
    std::vector<Vertex> vertices;
    ChordedTheta theta;
};

/// Calls visit on every chorded-theta of g, once per unordered path triple
/// and unordered terminal pair. Stops early when visit returns false.
void for_each_chorded_theta(const Graph & g, const std::function<bool(const ChordedTheta &)> & visit);
[[nodiscard]] std::vector<ChordedTheta> enumerate_chorded_thetas(const Graph & g);

[[nodiscard]] bool is_simple_chorded_theta(const ChordedTheta & t, const Graph & g);

/// Triangles {a,b,c} with a, b, c interior to the first, second and third path.
[[nodiscard]] std::vector<std::array<Vertex, 3>> transversal_triangles(const ChordedTheta & t, const Graph & g);

struct BruteForceResult {
    bool theta_ring = true;
    /// Minimum vertex count witness; ties go to the lexicographically smallest vertex set.
    std::optional<ChordedTheta> witness;
};

enum class SearchRoute {
    automatic,
    /// Path interior sets from a subset DP over the whole graph (n <= 20).
    global,
    /// Vertex subsets in increasing size; cheap when a small witness exists.
    by_subset,
};

[[nodiscard]] BruteForceResult is_theta_ring_bruteforce(const Graph & g, SearchRoute route = SearchRoute::automatic);

/// A chorded-theta without transversal triangle whose vertex set is exactly s, if any.
[[nodiscard]] std::optional<ChordedTheta> bad_theta_spanning(const Graph & g, std::span<const Vertex> s);

/// Theta with paths of a, b, c edges (each >= 2) between vertices 0 and 1.
[[nodiscard]] Graph make_theta(int a, int b, int c);
/// Triangles {0,1,2} and {3,4,5} joined by paths of l1, l2, l3 edges.
[[nodiscard]] Graph make_prism(int l1, int l2, int l3);
/// Apex 0 and triangle {1,2,3} joined by paths of p1, p2, p3 edges, at most one of length 1.
[[nodiscard]] Graph make_pyramid(int p1, int p2, int p3);
/// Centre 0 and chordless rim 1..k; the centre sees the rim positions listed
/// in `attachments` (0-based along the rim).
[[nodiscard]] Graph make_theta_partial_wheel(int k, std::span<const int> attachments);

/// Shape tests on a whole graph.
[[nodiscard]] bool is_theta_graph(const Graph & h);
[[nodiscard]] bool is_prism_graph(const Graph & h);
[[nodiscard]] bool is_pyramid_graph(const Graph & h);
[[nodiscard]] bool is_theta_partial_wheel_graph(const Graph & h);
[[nodiscard]] WitnessKind classify_shape(const Graph & h);

/// Absent iff g is theta-ring; otherwise the minimum witness and its family.
[[nodiscard]] std::optional<ForbiddenWitness> classify_forbidden(const Graph & g);

} // namespace thetaring
