#pragma once

#include "sqlab/bitset.hpp"
#include "sqlab/label.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sqlab {

/// Undirected edge between vertex indices, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected labeled (multi)graph. Immutable once built.
///
/// Vertex order is the order the builder supplied; edges are kept sorted,
/// parallel edges appear once per copy. Neighbor lists include a neighbor
/// once per parallel edge, so `degree` counts multiplicity.
class Graph {
public:
    Graph() = default;

    /// Builds from vertex labels and index pairs. Throws GraphError on
    /// duplicate labels, out-of-range endpoints, or self-loops.
    static Graph from_indices(std::vector<VertexLabel> labels, std::vector<std::pair<int, int>> edges,
                              std::vector<std::string> tags = {});

    [[nodiscard]] int order() const { return static_cast<int>(labels_.size()); }
    [[nodiscard]] int size() const { return static_cast<int>(edges_.size()); }
    [[nodiscard]] bool is_simple() const { return simple_; }

    [[nodiscard]] const std::vector<VertexLabel>& labels() const { return labels_; }
    [[nodiscard]] const VertexLabel& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
    [[nodiscard]] std::optional<int> find(const VertexLabel& label) const;
    /// Like find, but throws GraphError when the label is absent.
    [[nodiscard]] int index_of(const VertexLabel& label) const;

    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
    [[nodiscard]] const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] const VertexSet& neighbor_set(int v) const { return adj_set_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    [[nodiscard]] bool adjacent(int u, int v) const { return adj_set_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }
    [[nodiscard]] int multiplicity(int u, int v) const;

    [[nodiscard]] int max_degree() const;
    [[nodiscard]] int min_degree() const;

    /// Free-form provenance tags ("planar-unverified", "claims-not-applicable").
    [[nodiscard]] const std::vector<std::string>& tags() const { return tags_; }
    [[nodiscard]] bool has_tag(const std::string& tag) const;
    [[nodiscard]] Graph with_tags(std::vector<std::string> tags) const;

    /// Same labels in the same order and the same edge multiset.
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.labels_ == b.labels_ && a.edges_ == b.edges_;
    }

private:
    std::vector<VertexLabel> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexSet> adj_set_;
    std::map<VertexLabel, int> index_;
    std::vector<std::string> tags_;
    bool simple_ = true;
};

/// Builds a graph from labels and label pairs.
Graph build_graph(std::vector<VertexLabel> labels,
                  const std::vector<std::pair<VertexLabel, VertexLabel>>& edges,
                  std::vector<std::string> tags = {});

} // namespace sqlab
