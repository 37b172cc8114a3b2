#pragma once

#include "thetaring/graph.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace thetaring {

/// Relabelling of g that is identical for isomorphic graphs
/// (colour refinement plus individualization, smallest adjacency string wins).
[[nodiscard]] Graph canonical_form(const Graph & g);
/// graph6 string of the canonical form.
[[nodiscard]] std::string canonical_key(const Graph & g);

[[nodiscard]] bool is_bipartite(const Graph & g);

/// All graphs on exactly n vertices up to isomorphism, sorted by canonical key.
/// Built by vertex augmentation with isomorph rejection; intended for n <= 8.
[[nodiscard]] std::vector<Graph> all_graphs(int n);
[[nodiscard]] std::vector<Graph> all_bipartite_graphs(int n);

/// One graph6 string per line; blank lines and lines starting with '#' are skipped.
[[nodiscard]] std::vector<Graph> read_graph6_catalog(const std::filesystem::path & path);

} // namespace thetaring
