#pragma once

#include "thetaring/graph.hpp"
#include "thetaring/theta.hpp"

#include "json.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace thetaring {

enum class LeafKind { complete, cycle };

[[nodiscard]] std::string_view to_string(LeafKind kind) noexcept;

/// Leaf: a complete graph on `vertices`, or the cycle through them in order.
/// Sum: the union of both children, which meet exactly in the k-clique `shared`.
/// Vertex labels are those of the graph the tree certifies.
struct TreeNode {
    bool leaf = true;
    LeafKind kind = LeafKind::complete;
    std::vector<Vertex> vertices;
    int left = -1;
    int right = -1;
    int k = 0;
    std::vector<Vertex> shared;
};

struct DecompositionTree {
    std::vector<TreeNode> nodes;
    int root = -1;

    int add_leaf(LeafKind kind, std::vector<Vertex> vertices);
    int add_sum(int left, int right, std::vector<Vertex> shared);
    /// Appends the nodes of `other` and returns the index of its root.
    int graft(const DecompositionTree & other);

    [[nodiscard]] std::size_t leaf_count() const;
};

/// Glues g2 onto g1 along the pairs (v1, v2). Vertices of g1 keep their
/// labels; unmatched vertices of g2 follow in increasing order.
[[nodiscard]] Graph clique_sum(const Graph & g1, const Graph & g2, std::span<const std::pair<Vertex, Vertex>> identify);

/// Complete leaves only. Throws PreconditionError(not_chordal) on a graph with a hole.
[[nodiscard]] DecompositionTree chordal_clique_tree(const Graph & g);

/// One successful hole step of the recognizer, in labels of the input graph.
struct HoleStep {
    Cycle hole;
    /// Vertices off the hole grouped by the rim edge they attach to.
    std::vector<std::vector<Vertex>> parts;
    /// Vertex sets of the pieces recursed on: each part plus its rim edge.
    std::vector<std::vector<Vertex>> pieces;
};

struct RecognitionTrace {
    std::vector<HoleStep> steps;
};

struct Recognition {
    std::optional<DecompositionTree> tree;
    std::optional<ForbiddenWitness> witness;

    [[nodiscard]] bool theta_ring() const noexcept { return tree.has_value(); }
};

[[nodiscard]] Recognition recognize_theta_ring(const Graph & g, RecognitionTrace * trace = nullptr);

[[nodiscard]] bool is_ring_graph(const Graph & g);

/// Rebuilds the graph from the tree and compares it with g. Throws GraphError
/// on a structurally malformed tree (bad child index, shared set not a k-clique
/// equal to the children's overlap).
[[nodiscard]] bool verify_tree(const DecompositionTree & tree, const Graph & g);

[[nodiscard]] nlohmann::json to_json(const DecompositionTree & tree);
[[nodiscard]] DecompositionTree tree_from_json(const nlohmann::json & j);

} // namespace thetaring
