#pragma once

#include "thetaring/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace thetaring {

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;

    friend bool operator==(const Arc &, const Arc &) = default;
};

/// A graph with a direction on every edge. Arc i orients base().edges()[i],
/// and edge i carries the variable t_{i+1} in printed binomials.
class OrientedGraph {
public:
    OrientedGraph() = default;
    OrientedGraph(Graph base, std::vector<Arc> arcs);

    /// Edge i runs from its smaller to its larger endpoint unless bit i of `reversed` is set.
    static OrientedGraph from_mask(const Graph & base, std::uint64_t reversed);

    [[nodiscard]] const Graph & base() const noexcept { return base_; }
    [[nodiscard]] const std::vector<Arc> & arcs() const noexcept { return arcs_; }
    [[nodiscard]] const Arc & arc(int i) const { return arcs_.at(i); }
    [[nodiscard]] int order() const noexcept { return base_.order(); }
    [[nodiscard]] int size() const noexcept { return base_.size(); }
    /// True when the base edge {u,v} is oriented u -> v.
    [[nodiscard]] bool points(Vertex u, Vertex v) const;
    [[nodiscard]] OrientedGraph reversed() const;
    [[nodiscard]] std::uint64_t reversal_mask() const;

    friend bool operator==(const OrientedGraph &, const OrientedGraph &) = default;

private:
    Graph base_;
    std::vector<Arc> arcs_;
};

using Exponents = std::vector<int>;

/// t^plus - t^minus over the edge variables.
struct Binomial {
    Exponents plus;
    Exponents minus;

    [[nodiscard]] Binomial negated() const { return {minus, plus}; }
    [[nodiscard]] bool coprime() const;

    friend bool operator==(const Binomial &, const Binomial &) = default;
};

[[nodiscard]] bool equal_up_to_sign(const Binomial & a, const Binomial & b);

/// Dense n x q matrix with column e = (head) - (tail).
struct IncidenceMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int> entries;

    [[nodiscard]] int at(int r, int c) const { return entries.at(static_cast<std::size_t>(r) * cols + c); }
    [[nodiscard]] int rank() const;
};

[[nodiscard]] IncidenceMatrix incidence_matrix(const OrientedGraph & d);
[[nodiscard]] std::vector<int> multidegree(const OrientedGraph & d, const Exponents & u);

/// Traverses c in its stored order; edges passed tail to head go to plus.
[[nodiscard]] Binomial cycle_binomial(const OrientedGraph & d, const Cycle & c);
/// Binomials of the chordless cycles of the base graph.
[[nodiscard]] std::vector<Binomial> generating_set(const OrientedGraph & d);
/// q - n + r.
[[nodiscard]] int height(const OrientedGraph & d);

[[nodiscard]] std::optional<Cycle> oriented_cycle(const OrientedGraph & d);
[[nodiscard]] bool has_oriented_cycle(const OrientedGraph & d);

constexpr std::size_t default_fiber_cap = 1'000'000;

/// All u >= 0 with A u = b, in lexicographic order. Requires an acyclic orientation.
[[nodiscard]] std::vector<Exponents> fiber(const OrientedGraph & d, const std::vector<int> & b, std::size_t cap = default_fiber_cap);

/// Number of components of the fiber graph where monomials sharing a variable are joined.
[[nodiscard]] int fiber_components(const std::vector<Exponents> & fiber);

[[nodiscard]] int minimal_generator_count(const OrientedGraph & d, std::size_t cap = default_fiber_cap);
[[nodiscard]] bool is_binomial_ci(const OrientedGraph & d);

enum class CioMode { acyclic_only, all_supported };

struct CioResult {
    bool witness_found = false;
    std::optional<OrientedGraph> orientation;
    /// Index of the witness in the orientation enumeration.
    std::uint64_t index = 0;
    int mu = 0;
    int height = 0;
    std::uint64_t examined = 0;
    std::uint64_t skipped_cyclic = 0;
    std::vector<std::string> warnings;
};

/// Orientations are indexed by reversal masks with edge 0 kept forward, which
/// removes the global reversal symmetry. Returns the lowest-index orientation
/// whose ideal is not a binomial complete intersection. `threads` = 0 reads
/// THETA_RING_THREADS, falling back to the hardware concurrency.
[[nodiscard]] CioResult cio_search(const Graph & g, CioMode mode = CioMode::acyclic_only, int threads = 0);
[[nodiscard]] int worker_count(int requested = 0);

/// The binomial of the symmetric difference of two cycles sharing one oriented path,
/// after checking the combination identity that places it in (t_C1, t_C2).
[[nodiscard]] Binomial combine_cycles(const OrientedGraph & d, const Cycle & c1, const Cycle & c2);

/// Directed path through every vertex of a tournament, by insertion.
[[nodiscard]] Path hamiltonian_oriented_path(const OrientedGraph & d);

/// q - n + 1 triangle binomials generating the ideal of a connected chordal orientation.
[[nodiscard]] std::vector<Binomial> chordal_ci_generators(const OrientedGraph & d);

/// `t1^1t4^1 - t2^1t3^1`; an empty side prints as `1`.
[[nodiscard]] std::string to_string(const Binomial & b);
[[nodiscard]] Binomial parse_binomial(std::string_view text, int q);

/// Header `n m` followed by m lines `i tail head`, one per base edge index.
[[nodiscard]] OrientedGraph parse_orientation(std::istream & in, const Graph & base);
[[nodiscard]] OrientedGraph parse_orientation(std::string_view text, const Graph & base);
[[nodiscard]] std::string to_orientation_text(const OrientedGraph & d);

} // namespace thetaring
