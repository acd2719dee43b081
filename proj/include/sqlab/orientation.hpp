#pragma once

#include "sqlab/coloring.hpp"
#include "sqlab/graph.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sqlab {

/// A direction for every edge of a base graph. forward(e) means edge
/// u -> v for the stored edge {u < v}.
class Orientation {
public:
    Orientation(Graph base, std::vector<char> forward);

    [[nodiscard]] const Graph& base() const { return base_; }
    [[nodiscard]] bool forward(int e) const { return forward_.at(static_cast<std::size_t>(e)) != 0; }
    [[nodiscard]] int tail(int e) const;
    [[nodiscard]] int head(int e) const;
    [[nodiscard]] int out_degree(int v) const { return out_.at(static_cast<std::size_t>(v)); }
    [[nodiscard]] int in_degree(int v) const { return in_.at(static_cast<std::size_t>(v)); }
    /// (tail, head) per edge, in edge order.
    [[nodiscard]] std::vector<std::pair<int, int>> arcs() const;
    [[nodiscard]] Orientation reversed() const;
    /// |out - in| <= 1 everywhere.
    [[nodiscard]] bool is_balanced() const;

private:
    Graph base_;
    std::vector<char> forward_;
    std::vector<int> out_, in_;
};

/// Eulerian-circuit orientation: odd vertices of each component are paired
/// by virtual edges (in index order), every component is traversed with
/// Hierholzer's algorithm and the virtual edges are dropped.
Orientation balanced_orientation(const Graph& g);

/// Balanced orientation with out_degree(z) <= floor(deg(z)/2), reversing
/// z's component when needed.
Orientation favored_orientation(const Graph& g, int z);

/// Balanced orientation favoring every vertex of Z at once. Requires g
/// connected and (k-1)-edge-connected with exactly 2k odd vertices, and Z a
/// set of k odd vertices; throws PreconditionError otherwise. The last
/// vertex of Z plays the role of the single favored vertex; the others are
/// joined to odd vertices outside Z by edge-disjoint paths, which are
/// oriented towards Z after the rest is balanced.
Orientation odd_set_orientation(const Graph& g, std::vector<int> Z, int k);

struct AlonTarsiCounts {
    std::uint64_t even = 0;
    std::uint64_t odd = 0;
};

/// Largest edge count accepted by alon_tarsi_counts.
inline constexpr int kAlonTarsiMaxEdges = 24;

/// Spanning Eulerian sub-digraphs (in = out at every vertex) split by parity
/// of their edge count; the empty one is even. Gray-code sweep over all edge
/// subsets.
AlonTarsiCounts alon_tarsi_counts(const Orientation& d);

struct HarnessReport {
    int trials = 0;
    int feasible = 0;
    int infeasible = 0;
    int unknown = 0;
    bool orientation_ok = false; ///< out-degree + 1 <= list size everywhere
    std::optional<ListAssignment> counterexample;
    [[nodiscard]] bool ok() const { return orientation_ok && infeasible == 0 && unknown == 0; }
};

struct HarnessOptions {
    int trials = 1000;
    std::uint64_t seed = 1;
    std::optional<int> favored;              ///< gets floor(deg/2)+1 colors
    std::optional<std::vector<int>> universe; ///< default 1..maxdeg+2
    unsigned threads = 1;
};

/// Random lists of size ceil(deg(v)/2)+1 (floor(deg(z)/2)+1 for the favored
/// vertex) drawn from the universe; each must be list-colorable. Trial t
/// uses its own generator seeded from (seed, t), so results do not depend
/// on the thread count. Throws PreconditionError on non-bipartite input.
HarnessReport at_bound_harness(const Graph& g, const HarnessOptions& opts);

} // namespace sqlab
