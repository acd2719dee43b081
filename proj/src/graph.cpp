#include "sqlab/graph.hpp"

#include "sqlab/errors.hpp"

#include <algorithm>

namespace sqlab {

Graph Graph::from_indices(std::vector<VertexLabel> labels, std::vector<std::pair<int, int>> edges,
                          std::vector<std::string> tags) {
    Graph g;
    const int n = static_cast<int>(labels.size());
    for (int i = 0; i < n; ++i) {
        auto [it, inserted] = g.index_.emplace(labels[static_cast<std::size_t>(i)], i);
        if (!inserted)
            throw GraphError("duplicate vertex label " + labels[static_cast<std::size_t>(i)].str());
    }
    g.labels_ = std::move(labels);
    g.edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw GraphError("edge endpoint out of range");
        if (a == b)
            throw GraphError("self-loop at " + g.labels_[static_cast<std::size_t>(a)].str());
        g.edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.simple_ = std::adjacent_find(g.edges_.begin(), g.edges_.end()) == g.edges_.end();

    g.adj_.assign(static_cast<std::size_t>(n), {});
    g.adj_set_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
    for (const Edge& e : g.edges_) {
        g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
        g.adj_set_[static_cast<std::size_t>(e.u)].set(static_cast<std::size_t>(e.v));
        g.adj_set_[static_cast<std::size_t>(e.v)].set(static_cast<std::size_t>(e.u));
    }
    for (auto& nb : g.adj_)
        std::sort(nb.begin(), nb.end());
    g.tags_ = std::move(tags);
    return g;
}

std::optional<int> Graph::find(const VertexLabel& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

int Graph::index_of(const VertexLabel& label) const {
    auto idx = find(label);
    if (!idx)
        throw GraphError("unknown vertex " + label.str());
    return *idx;
}

int Graph::multiplicity(int u, int v) const {
    const auto& nb = neighbors(u);
    return static_cast<int>(std::count(nb.begin(), nb.end(), v));
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < order(); ++v)
        d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (order() == 0)
        return 0;
    int d = degree(0);
    for (int v = 1; v < order(); ++v)
        d = std::min(d, degree(v));
    return d;
}

bool Graph::has_tag(const std::string& tag) const {
    return std::find(tags_.begin(), tags_.end(), tag) != tags_.end();
}

Graph Graph::with_tags(std::vector<std::string> tags) const {
    Graph g = *this;
    g.tags_ = std::move(tags);
    return g;
}

Graph build_graph(std::vector<VertexLabel> labels, const std::vector<std::pair<VertexLabel, VertexLabel>>& edges,
                  std::vector<std::string> tags) {
    std::map<VertexLabel, int> index;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (!index.emplace(labels[i], static_cast<int>(i)).second)
            throw GraphError("duplicate vertex label " + labels[i].str());
    std::vector<std::pair<int, int>> idx_edges;
    idx_edges.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end())
            throw GraphError("unknown edge endpoint " + a.str());
        if (ib == index.end())
            throw GraphError("unknown edge endpoint " + b.str());
        if (ia->second == ib->second)
            throw GraphError("self-loop at " + a.str());
        idx_edges.emplace_back(ia->second, ib->second);
    }
    return Graph::from_indices(std::move(labels), std::move(idx_edges), std::move(tags));
}

} // namespace sqlab
