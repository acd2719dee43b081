#include "sqlab/maxflow.hpp"

#include "sqlab/errors.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace sqlab {

namespace {

// Residual network over the base vertices plus a super source and sink.
// Every undirected base edge e becomes arcs 2e (u->v) and 2e+1 (v->u) of
// capacity 1 sharing one unit: flow[e] in {-1, 0, 1}.
class UnitNetwork {
public:
    UnitNetwork(const Graph& g, const std::vector<int>& sources, const std::vector<int>& sinks)
        : g_(g), n_(g.order()), flow_(static_cast<std::size_t>(g.size()), 0),
          src_used_(static_cast<std::size_t>(g.order()), 0), snk_used_(static_cast<std::size_t>(g.order()), 0),
          is_src_(static_cast<std::size_t>(g.order()), 0), is_snk_(static_cast<std::size_t>(g.order()), 0),
          incident_(static_cast<std::size_t>(g.order())) {
        for (int s : sources)
            is_src_.at(static_cast<std::size_t>(s)) = 1;
        for (int t : sinks)
            is_snk_.at(static_cast<std::size_t>(t)) = 1;
        for (int e = 0; e < g.size(); ++e) {
            incident_[static_cast<std::size_t>(g.edges()[static_cast<std::size_t>(e)].u)].push_back(e);
            incident_[static_cast<std::size_t>(g.edges()[static_cast<std::size_t>(e)].v)].push_back(e);
        }
    }

    int run() {
        int value = 0;
        while (augment())
            ++value;
        return value;
    }

    // Residual capacity of moving one unit along edge e leaving `from`.
    [[nodiscard]] bool can_push(int e, int from) const {
        const Edge& ed = g_.edges()[static_cast<std::size_t>(e)];
        const int dir = from == ed.u ? 1 : -1;
        return flow_[static_cast<std::size_t>(e)] != dir;
    }

    std::vector<FlowPath> decompose() const {
        // outgoing unit arcs per vertex after cancellation
        std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
        for (int e = 0; e < g_.size(); ++e) {
            const Edge& ed = g_.edges()[static_cast<std::size_t>(e)];
            if (flow_[static_cast<std::size_t>(e)] == 1)
                out[static_cast<std::size_t>(ed.u)].push_back(e);
            else if (flow_[static_cast<std::size_t>(e)] == -1)
                out[static_cast<std::size_t>(ed.v)].push_back(e);
        }
        // Walk each unit from its source and stop at the first sink that has
        // not absorbed a path yet. Conservation guarantees an unused
        // outgoing arc everywhere else; leftover flow cycles are dropped.
        std::vector<char> claimed(static_cast<std::size_t>(n_), 0);
        std::vector<FlowPath> paths;
        for (int s = 0; s < n_; ++s) {
            if (!src_used_[static_cast<std::size_t>(s)])
                continue;
            FlowPath p;
            p.vertices.push_back(s);
            int v = s;
            while (!(snk_used_[static_cast<std::size_t>(v)] && !claimed[static_cast<std::size_t>(v)])) {
                auto& o = out[static_cast<std::size_t>(v)];
                if (o.empty())
                    throw GraphError("flow decomposition failed");
                const int e = o.back();
                o.pop_back();
                const Edge& ed = g_.edges()[static_cast<std::size_t>(e)];
                v = ed.u == v ? ed.v : ed.u;
                p.edges.push_back(e);
                p.vertices.push_back(v);
            }
            claimed[static_cast<std::size_t>(v)] = 1;
            paths.push_back(std::move(p));
        }
        return paths;
    }

private:
    bool augment() {
        // BFS from all unused sources to any unused sink
        std::vector<int> parent_edge(static_cast<std::size_t>(n_), -2);
        std::queue<int> q;
        for (int s = 0; s < n_; ++s)
            if (is_src_[static_cast<std::size_t>(s)] && !src_used_[static_cast<std::size_t>(s)]) {
                parent_edge[static_cast<std::size_t>(s)] = -1;
                q.push(s);
            }
        int hit = -1;
        while (!q.empty() && hit < 0) {
            const int v = q.front();
            q.pop();
            if (is_snk_[static_cast<std::size_t>(v)] && !snk_used_[static_cast<std::size_t>(v)]) {
                hit = v;
                break;
            }
            for (int e : incident_[static_cast<std::size_t>(v)]) {
                const Edge& ed = g_.edges()[static_cast<std::size_t>(e)];
                const int w = ed.u == v ? ed.v : ed.u;
                if (parent_edge[static_cast<std::size_t>(w)] != -2 || !can_push(e, v))
                    continue;
                parent_edge[static_cast<std::size_t>(w)] = e;
                q.push(w);
            }
        }
        if (hit < 0)
            return false;
        snk_used_[static_cast<std::size_t>(hit)] = 1;
        int v = hit;
        while (parent_edge[static_cast<std::size_t>(v)] >= 0) {
            const int e = parent_edge[static_cast<std::size_t>(v)];
            const Edge& ed = g_.edges()[static_cast<std::size_t>(e)];
            const int from = ed.u == v ? ed.v : ed.u;
            flow_[static_cast<std::size_t>(e)] += from == ed.u ? 1 : -1;
            v = from;
        }
        src_used_[static_cast<std::size_t>(v)] = 1;
        return true;
    }

    const Graph& g_;
    int n_;
    std::vector<int> flow_;
    std::vector<char> src_used_, snk_used_, is_src_, is_snk_;
    std::vector<std::vector<int>> incident_;
};

} // namespace

DisjointPaths edge_disjoint_paths(const Graph& g, const std::vector<int>& sources, const std::vector<int>& sinks) {
    for (int s : sources)
        if (std::find(sinks.begin(), sinks.end(), s) != sinks.end())
            throw ParameterError("a vertex cannot be both source and sink");
    UnitNetwork net(g, sources, sinks);
    DisjointPaths out;
    out.value = net.run();
    out.paths = net.decompose();
    return out;
}

int local_edge_connectivity(const Graph& g, int s, int t) {
    if (s == t)
        throw ParameterError("local edge connectivity needs distinct vertices");
    // same residual rule as UnitNetwork, but terminals carry any number of units
    const int n = g.order();
    std::vector<int> flow(static_cast<std::size_t>(g.size()), 0);
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
    for (int e = 0; e < g.size(); ++e) {
        incident[static_cast<std::size_t>(g.edges()[static_cast<std::size_t>(e)].u)].push_back(e);
        incident[static_cast<std::size_t>(g.edges()[static_cast<std::size_t>(e)].v)].push_back(e);
    }
    int value = 0;
    while (true) {
        std::vector<int> parent(static_cast<std::size_t>(n), -2);
        parent[static_cast<std::size_t>(s)] = -1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty() && parent[static_cast<std::size_t>(t)] == -2) {
            const int v = q.front();
            q.pop();
            for (int e : incident[static_cast<std::size_t>(v)]) {
                const Edge& ed = g.edges()[static_cast<std::size_t>(e)];
                const int w = ed.u == v ? ed.v : ed.u;
                const int dir = v == ed.u ? 1 : -1;
                if (parent[static_cast<std::size_t>(w)] != -2 || flow[static_cast<std::size_t>(e)] == dir)
                    continue;
                parent[static_cast<std::size_t>(w)] = e;
                q.push(w);
            }
        }
        if (parent[static_cast<std::size_t>(t)] == -2)
            return value;
        ++value;
        for (int v = t; v != s;) {
            const int e = parent[static_cast<std::size_t>(v)];
            const Edge& ed = g.edges()[static_cast<std::size_t>(e)];
            const int from = ed.u == v ? ed.v : ed.u;
            flow[static_cast<std::size_t>(e)] += from == ed.u ? 1 : -1;
            v = from;
        }
    }
}

int edge_connectivity(const Graph& g) {
    if (g.order() < 2)
        return 0;
    int best = std::numeric_limits<int>::max();
    for (int t = 1; t < g.order(); ++t)
        best = std::min(best, local_edge_connectivity(g, 0, t));
    return best;
}

} // namespace sqlab
