#pragma once

#include "thetaring/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace thetaring::cli {

/// Exit codes shared by the subcommands.
enum Exit : int {
    ok = 0,
    /// recognize/forbidden: a witness was found; toric: not a complete intersection; cio: witness found.
    negative = 1,
    input_error = 2,
    unsupported_orientation = 3,
    internal_error = 4,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

struct SelftestOptions {
    int max_n = 6;
    /// Orientation cross-check only up to this order.
    int cio_max_n = 6;
    std::optional<std::filesystem::path> catalog;
    int threads = 0;
};

struct SelftestRow {
    int n = 0;
    int graphs = 0;
    int theta_ring = 0;
    int forbidden = 0;
    int disagreements = 0;
    int cio_checked = 0;
    int cio_disagreements = 0;
};

/// Problems found for one graph; empty when every check agrees.
[[nodiscard]] std::vector<std::string> check_graph(const Graph & g, bool with_cio, bool * theta_ring = nullptr);

[[nodiscard]] std::vector<SelftestRow> run_selftest(const SelftestOptions & options, std::vector<std::string> * problems = nullptr);

} // namespace thetaring::cli
