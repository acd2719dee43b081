#pragma once

#include "sqlab/coloring.hpp"
#include "sqlab/graph.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sqlab {

struct SolveOptions {
    std::uint64_t node_budget = 0;    ///< 0 = unlimited
    std::uint64_t time_budget_ms = 0; ///< 0 = unlimited
    unsigned threads = 1;
    /// Return the lexicographically least witness (by vertex index).
    bool deterministic = false;

    /// Defaults overridden by SQLAB_THREADS, SQLAB_BUDGET_NODES and
    /// SQLAB_BUDGET_MS when set.
    static SolveOptions from_environment();
};

enum class Outcome { feasible, infeasible, unknown };

std::string outcome_name(Outcome o);

/// Result of an exact decision procedure. `unknown` means a budget ran out
/// and says nothing about feasibility.
struct Verdict {
    Outcome outcome = Outcome::unknown;
    std::optional<Coloring> witness;
    std::uint64_t nodes = 0;
    std::chrono::milliseconds elapsed{0};

    [[nodiscard]] bool feasible() const { return outcome == Outcome::feasible; }
    [[nodiscard]] bool infeasible() const { return outcome == Outcome::infeasible; }
    [[nodiscard]] bool budget_hit() const { return outcome == Outcome::unknown; }
};

/// Exact list-coloring decision for admissible lists.
///
/// Backtracking over the unassigned vertex with the fewest remaining colors
/// (ties by vertex index), colors in ascending order, with forward checking
/// and propagation of forced (singleton) vertices. A vertex with an empty
/// list makes the instance infeasible without search.
Verdict list_colorable(const Graph& g, const ListAssignment& lists, const SolveOptions& opts = {});

struct ChromaticResult {
    int value = 0;                 ///< exact when outcome == feasible
    Coloring witness;              ///< uses colors 1..value
    Outcome outcome = Outcome::unknown;
    int lower_bound = 0;           ///< clique number
    std::uint64_t nodes = 0;
    std::chrono::milliseconds elapsed{0};
};

/// Exact chromatic number: clique lower bound, DSATUR upper bound, and a
/// saturation-ordered k-colorability search for each k in between with the
/// maximum clique precolored.
ChromaticResult chromatic_number(const Graph& g, const SolveOptions& opts = {});

/// Greedy DSATUR coloring (colors 1..).
Coloring dsatur_coloring(const Graph& g);

/// Proper k-coloring with c(v) != c0(v) for every v. Infeasible verdicts
/// certify that the Mirzakhani number exceeds k.
Verdict forbidding_infeasible(const Graph& g, int k, const std::vector<int>& c0, const SolveOptions& opts = {});

/// Proper coloring from 1..k with c(v) not in L(v), L in forbidden mode.
Verdict avoid_colorable(const Graph& g, int k, const ListAssignment& forbidden, const SolveOptions& opts = {});

} // namespace sqlab
