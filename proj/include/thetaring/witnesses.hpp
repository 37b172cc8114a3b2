#pragma once

#include "thetaring/toric.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace thetaring {

/// One of the small oriented non-CI graphs together with its documented
/// chordless-cycle equations, written over named path variables.
struct OrientedWitness {
    std::string name;
    std::vector<std::string> vertex_names;
    OrientedGraph digraph;
    std::vector<std::string> edge_names;
    /// Variable name used in the equations -> edge indices of the path it stands for.
    std::map<std::string, std::vector<int>> variables;
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> equations;
    int expected_height = 0;

    [[nodiscard]] Binomial equation(std::size_t i) const;
    [[nodiscard]] std::vector<Binomial> equation_binomials() const;
};

[[nodiscard]] OrientedWitness oriented_theta();
[[nodiscard]] OrientedWitness oriented_pyramid();
[[nodiscard]] OrientedWitness oriented_prism();
[[nodiscard]] OrientedWitness oriented_partial_wheel3();
/// Full wheel with k >= 4 rim vertices.
[[nodiscard]] OrientedWitness oriented_wheel(int k);

/// theta, pyramid, prism, pw3, pw4, pw5.
[[nodiscard]] std::vector<OrientedWitness> oriented_witnesses();
/// Names as above; `pwK` for any K >= 4 builds the wheel.
[[nodiscard]] std::optional<OrientedWitness> oriented_witness(const std::string & name);

} // namespace thetaring
