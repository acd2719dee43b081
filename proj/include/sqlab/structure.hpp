#pragma once

#include "sqlab/graph.hpp"

#include <optional>
#include <vector>

namespace sqlab {

struct Bipartition {
    std::vector<int> left;
    std::vector<int> right;
};

/// Two-coloring of every component, or nullopt when an odd cycle exists.
std::optional<Bipartition> is_bipartite(const Graph& g);

/// A closed walk of odd length (as a vertex sequence, first vertex not
/// repeated at the end), or nullopt if the graph is bipartite.
std::optional<std::vector<int>> odd_closed_walk(const Graph& g);

/// Length of a shortest cycle; parallel edges give 2; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// True when some cycle of exactly `length` exists (3 <= length <= 6).
bool has_cycle_of_length(const Graph& g, int length);

/// A maximum clique, found by branch and bound with greedy-coloring bounds.
std::vector<int> maximum_clique(const Graph& g);
int clique_number(const Graph& g);

bool is_claw_free(const Graph& g);

/// All independent sets with exactly `size` vertices, each sorted, in
/// lexicographic order.
std::vector<std::vector<int>> maximum_independent_sets(const Graph& g, int size);
int independence_number(const Graph& g);

Graph complement(const Graph& g);

/// Sorted part sizes when g is complete multipartite, nullopt otherwise.
std::optional<std::vector<int>> is_complete_multipartite(const Graph& g);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Common degree when g is regular.
std::optional<int> regular_degree(const Graph& g);

struct StructureReport {
    bool is_bipartite = false;
    std::optional<int> regular_degree;
    std::optional<int> girth;
    int clique_number = 0;
    bool is_claw_free = false;
    int max_degree = 0;
};

StructureReport structure_report(const Graph& g);

} // namespace sqlab
