#pragma once

#include "sqlab/graph.hpp"

#include <vector>

namespace sqlab {

/// One path as a walk of vertices plus the base-graph edge indices used.
struct FlowPath {
    std::vector<int> vertices;
    std::vector<int> edges;
};

struct DisjointPaths {
    int value = 0;
    std::vector<FlowPath> paths; ///< each starts at a source and ends at a sink
};

/// Maximum set of pairwise edge-disjoint paths from distinct `sources` to
/// distinct `sinks` (each terminal used at most once), by unit-capacity
/// augmenting paths. Undirected edges carry one unit in either direction.
DisjointPaths edge_disjoint_paths(const Graph& g, const std::vector<int>& sources, const std::vector<int>& sinks);

/// Number of edge-disjoint s-t paths.
int local_edge_connectivity(const Graph& g, int s, int t);

/// Minimum over t != 0 of local_edge_connectivity(g, 0, t); 0 for
/// disconnected graphs and for graphs with fewer than two vertices.
int edge_connectivity(const Graph& g);

} // namespace sqlab
