#include "sqlab/transforms.hpp"

#include "sqlab/errors.hpp"

#include <queue>

namespace sqlab {

namespace {

void require_simple(const Graph& g, const char* op) {
    if (!g.is_simple())
        throw GraphError(std::string(op) + " requires a simple graph");
}

// Copy numbers for parallel edges, in edge order.
std::vector<int> edge_copies(const Graph& g) {
    std::vector<int> copies;
    copies.reserve(static_cast<std::size_t>(g.size()));
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        copies.push_back(i > 0 && edges[i] == edges[i - 1] ? copies.back() + 1 : 0);
    return copies;
}

} // namespace

std::vector<int> distances_from(const Graph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    dist[static_cast<std::size_t>(source)] = 0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        for (int b : g.neighbors(a))
            if (dist[static_cast<std::size_t>(b)] == -1) {
                dist[static_cast<std::size_t>(b)] = dist[static_cast<std::size_t>(a)] + 1;
                q.push(b);
            }
    }
    return dist;
}

Graph power(const Graph& g, int k) {
    require_simple(g, "power");
    if (k < 1)
        throw ParameterError("power exponent must be positive");
    std::vector<std::pair<int, int>> edges;
    for (int s = 0; s < g.order(); ++s) {
        auto dist = distances_from(g, s);
        for (int t = s + 1; t < g.order(); ++t)
            if (dist[static_cast<std::size_t>(t)] >= 1 && dist[static_cast<std::size_t>(t)] <= k)
                edges.emplace_back(s, t);
    }
    return Graph::from_indices(g.labels(), std::move(edges), g.tags());
}

Graph line_graph(const Graph& g) {
    const auto& edges = g.edges();
    const auto copies = edge_copies(g);
    std::vector<VertexLabel> labels;
    labels.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        labels.push_back(VertexLabel::composite(Role::line, g.label(edges[i].u), g.label(edges[i].v), copies[i]));

    // Two edges meet in L(g) when they share an end; parallel copies share both.
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge& a = edges[i];
            const Edge& b = edges[j];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
                out.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return Graph::from_indices(std::move(labels), std::move(out), g.tags());
}

VertexLabel subdivision_label(const Graph& base, int a, int b, int copy) {
    if (a > b)
        std::swap(a, b);
    return VertexLabel::composite(Role::subdivision, base.label(a), base.label(b), copy);
}

Graph subdivision(const Graph& g) {
    const auto& edges = g.edges();
    const auto copies = edge_copies(g);
    std::vector<VertexLabel> labels = g.labels();
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        int s = static_cast<int>(labels.size());
        labels.push_back(subdivision_label(g, edges[i].u, edges[i].v, copies[i]));
        out.emplace_back(edges[i].u, s);
        out.emplace_back(s, edges[i].v);
    }
    return Graph::from_indices(std::move(labels), std::move(out), g.tags());
}

Graph total_graph(const Graph& g) {
    require_simple(g, "total_graph");
    const auto& edges = g.edges();
    const int n = g.order();
    std::vector<VertexLabel> labels = g.labels();
    for (const Edge& e : edges)
        labels.push_back(subdivision_label(g, e.u, e.v));
    std::vector<std::pair<int, int>> out;
    // vertex-vertex adjacency as in g
    for (const Edge& e : edges)
        out.emplace_back(e.u, e.v);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const int ei = n + static_cast<int>(i);
        // vertex-edge incidence
        out.emplace_back(edges[i].u, ei);
        out.emplace_back(edges[i].v, ei);
        // edge-edge: common end
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge& a = edges[i];
            const Edge& b = edges[j];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
                out.emplace_back(ei, n + static_cast<int>(j));
        }
    }
    return Graph::from_indices(std::move(labels), std::move(out), g.tags());
}

Graph apply_transform(const Graph& g, const std::string& name) {
    if (name == "square")
        return square(g);
    if (name == "line")
        return line_graph(g);
    if (name == "subdivide")
        return subdivision(g);
    if (name == "total")
        return total_graph(g);
    throw ParameterError("unknown transform '" + name + "'");
}

Graph apply_chain(Graph g, const std::vector<std::string>& chain) {
    for (const auto& name : chain)
        g = apply_transform(g, name);
    return g;
}

int line_vertex(const Graph& line, const VertexLabel& a, const VertexLabel& b) {
    if (auto i = line.find(VertexLabel::composite(Role::line, a, b)))
        return *i;
    if (auto i = line.find(VertexLabel::composite(Role::line, b, a)))
        return *i;
    return -1;
}

} // namespace sqlab
