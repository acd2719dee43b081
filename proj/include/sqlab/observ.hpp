#pragma once

#include "sqlab/coloring.hpp"
#include "sqlab/graph.hpp"
#include "sqlab/solver.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sqlab {

/// Strong 5-edge-coloring of P(10,3) (colors 1..5 per edge index), found as
/// a 5-coloring of L(P(10,3))^2 with a deterministic search.
std::vector<int> petersen_10_3_edge_coloring();

/// Forbidden-mode lists over {1..5}: v must avoid the two colors that are
/// not on its edges, so avoiding at k = 5 means coloring v from its incident
/// edge colors.
ListAssignment observ_forbidden_lists(const Graph& p10_3, const std::vector<int>& edge_colors);

struct ObservOptions {
    int gadget_budget = 100;   ///< random gadgets to try; 0 = base graph only
    int max_new_vertices = 6;
    int max_new_edges = 12;
    int degree_cap = 6;
    std::uint64_t seed = 1;
    SolveOptions solve;
};

struct ObservGadget {
    int index = 0;         ///< gadget number, reproducible from (seed, index)
    Graph graph;           ///< P(10,3) plus the gadget
    ListAssignment lists;  ///< forbidden mode, k = 5
    Verdict verdict;
};

struct ObservReport {
    std::vector<int> edge_coloring;
    Verdict base_verdict;             ///< P(10,3) alone at k = 5
    int tried = 0;
    int unknown = 0;                  ///< solves that ran out of budget
    std::vector<ObservGadget> witnesses; ///< combined graphs that cannot avoid at k = 5
    [[nodiscard]] bool complete() const { return unknown == 0; }
};

/// Random bipartite attachments to P(10,3): new vertices z[i] get a side of
/// the bipartition and random 2-subsets of {1..5} as forbidden lists; edges
/// only join opposite sides and respect the degree cap. Each gadget whose
/// combined graph has no L-avoiding 5-coloring is re-solved before it is
/// reported.
ObservReport observ_search(const std::optional<std::vector<int>>& edge_coloring, const ObservOptions& opts);

} // namespace sqlab
