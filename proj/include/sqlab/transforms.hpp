#pragma once

#include "sqlab/graph.hpp"

#include <string>
#include <vector>

namespace sqlab {

/// Vertices at distance 1..k become adjacent. Requires a simple graph.
Graph power(const Graph& g, int k);
inline Graph square(const Graph& g) { return power(g, 2); }

/// One vertex `line(a,b)` per edge ab; parallel copies get `#copy` and are
/// adjacent to each other. Accepts multigraphs; the result is simple.
Graph line_graph(const Graph& g);

/// Original vertices first, then one `sub(a,b)` vertex per edge.
Graph subdivision(const Graph& g);

/// Vertex set V(g) plus one `sub(a,b)` per edge, with the same labels and
/// order as subdivision(g), so total_graph(g) == square(subdivision(g)).
/// Requires a simple graph.
Graph total_graph(const Graph& g);

/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> distances_from(const Graph& g, int source);

/// Names accepted by apply_transform: square, line, subdivide, total.
Graph apply_transform(const Graph& g, const std::string& name);
Graph apply_chain(Graph g, const std::vector<std::string>& chain);

/// Index of the line-graph vertex built from the edge between labels a and
/// b (either orientation, copy 0), or -1.
int line_vertex(const Graph& line, const VertexLabel& a, const VertexLabel& b);

/// Canonical `sub(a,b)` label for the edge between a and b of `base`
/// (ends in base index order).
VertexLabel subdivision_label(const Graph& base, int a, int b, int copy = 0);

} // namespace sqlab
