#pragma once

#include "thetaring/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace thetaring {

/// Edge-list text: a header line `n m`, then m lines `u v` with 0-based
/// vertices. Loops, duplicates, out of range vertices and a wrong line count
/// raise ParseError carrying the offending line number.
[[nodiscard]] Graph parse_edge_list(std::istream & in);
[[nodiscard]] Graph parse_edge_list(std::string_view text);
[[nodiscard]] Graph read_edge_list(const std::filesystem::path & path);
[[nodiscard]] std::string to_edge_list(const Graph & g);

/// graph6 encoding, as used by common graph catalogs (n <= 62).
[[nodiscard]] Graph parse_graph6(std::string_view line);
[[nodiscard]] std::string to_graph6(const Graph & g);

/// 64-bit FNV-1a digest of arbitrary bytes, as 16 hex digits.
[[nodiscard]] std::string digest(std::string_view bytes);

} // namespace thetaring
