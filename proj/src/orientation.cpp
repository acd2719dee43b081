#include "sqlab/orientation.hpp"

#include "sqlab/errors.hpp"
#include "sqlab/maxflow.hpp"
#include "sqlab/solver.hpp"
#include "sqlab/structure.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <thread>

namespace sqlab {

Orientation::Orientation(Graph base, std::vector<char> forward)
    : base_(std::move(base)), forward_(std::move(forward)) {
    if (forward_.size() != static_cast<std::size_t>(base_.size()))
        throw ParameterError("orientation needs one direction per edge");
    out_.assign(static_cast<std::size_t>(base_.order()), 0);
    in_.assign(static_cast<std::size_t>(base_.order()), 0);
    for (int e = 0; e < base_.size(); ++e) {
        ++out_[static_cast<std::size_t>(tail(e))];
        ++in_[static_cast<std::size_t>(head(e))];
    }
}

int Orientation::tail(int e) const {
    const Edge& ed = base_.edges().at(static_cast<std::size_t>(e));
    return forward(e) ? ed.u : ed.v;
}

int Orientation::head(int e) const {
    const Edge& ed = base_.edges().at(static_cast<std::size_t>(e));
    return forward(e) ? ed.v : ed.u;
}

std::vector<std::pair<int, int>> Orientation::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(forward_.size());
    for (int e = 0; e < base_.size(); ++e)
        out.emplace_back(tail(e), head(e));
    return out;
}

Orientation Orientation::reversed() const {
    std::vector<char> f(forward_.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = forward_[i] ? 0 : 1;
    return {base_, std::move(f)};
}

bool Orientation::is_balanced() const {
    for (int v = 0; v < base_.order(); ++v)
        if (std::abs(out_degree(v) - in_degree(v)) > 1)
            return false;
    return true;
}

namespace {

// Orients the edges of `g` whose mask entry is set; other entries of
// `forward` are left untouched.
void balance_into(const Graph& g, const std::vector<char>& mask, std::vector<char>& forward) {
    const int n = g.order();
    const int m = g.size();
    // augmented edge list: real edges (masked) then virtual ones
    std::vector<std::pair<int, int>> ends;
    std::vector<int> real_index;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (int e = 0; e < m; ++e) {
        if (!mask[static_cast<std::size_t>(e)])
            continue;
        const Edge& ed = g.edges()[static_cast<std::size_t>(e)];
        ends.emplace_back(ed.u, ed.v);
        real_index.push_back(e);
        ++deg[static_cast<std::size_t>(ed.u)];
        ++deg[static_cast<std::size_t>(ed.v)];
    }
    // components of the masked subgraph
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
        for (auto [u, v] : ends) {
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
        }
        int c = 0;
        for (int s = 0; s < n; ++s) {
            if (comp[static_cast<std::size_t>(s)] >= 0)
                continue;
            std::vector<int> stack{s};
            comp[static_cast<std::size_t>(s)] = c;
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                for (int w : adj[static_cast<std::size_t>(v)])
                    if (comp[static_cast<std::size_t>(w)] < 0) {
                        comp[static_cast<std::size_t>(w)] = c;
                        stack.push_back(w);
                    }
            }
            ++c;
        }
    }
    std::vector<int> pending(static_cast<std::size_t>(n), -1); // per component: unmatched odd vertex
    for (int v = 0; v < n; ++v) {
        if (deg[static_cast<std::size_t>(v)] % 2 == 0)
            continue;
        int& slot = pending[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
        if (slot < 0) {
            slot = v;
        } else {
            ends.emplace_back(slot, v);
            real_index.push_back(-1);
            slot = -1;
        }
    }

    const int total = static_cast<int>(ends.size());
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(n));
    for (int e = 0; e < total; ++e) {
        inc[static_cast<std::size_t>(ends[static_cast<std::size_t>(e)].first)].push_back(e);
        inc[static_cast<std::size_t>(ends[static_cast<std::size_t>(e)].second)].push_back(e);
    }
    std::vector<char> used(static_cast<std::size_t>(total), 0);
    std::vector<std::size_t> ptr(static_cast<std::size_t>(n), 0);
    // iterative Hierholzer; each edge is oriented in the direction it is
    // first walked, which splits the circuit into closed trails
    for (int s = 0; s < n; ++s) {
        std::vector<int> stack{s};
        while (!stack.empty()) {
            const int v = stack.back();
            auto& p = ptr[static_cast<std::size_t>(v)];
            const auto& iv = inc[static_cast<std::size_t>(v)];
            while (p < iv.size() && used[static_cast<std::size_t>(iv[p])])
                ++p;
            if (p == iv.size()) {
                stack.pop_back();
                continue;
            }
            const int e = iv[p];
            used[static_cast<std::size_t>(e)] = 1;
            const auto [a, b] = ends[static_cast<std::size_t>(e)];
            const int w = a == v ? b : a;
            const int r = real_index[static_cast<std::size_t>(e)];
            if (r >= 0)
                forward[static_cast<std::size_t>(r)] = v == g.edges()[static_cast<std::size_t>(r)].u ? 1 : 0;
            stack.push_back(w);
        }
    }
}

std::vector<int> component_of(const Graph& g, int z, const std::vector<char>& mask) {
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(g.order()));
    for (int e = 0; e < g.size(); ++e)
        if (mask[static_cast<std::size_t>(e)]) {
            inc[static_cast<std::size_t>(g.edges()[static_cast<std::size_t>(e)].u)].push_back(e);
            inc[static_cast<std::size_t>(g.edges()[static_cast<std::size_t>(e)].v)].push_back(e);
        }
    std::vector<int> edges;
    std::vector<int> stack{z};
    seen[static_cast<std::size_t>(z)] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int e : inc[static_cast<std::size_t>(v)]) {
            const Edge& ed = g.edges()[static_cast<std::size_t>(e)];
            const int w = ed.u == v ? ed.v : ed.u;
            edges.push_back(e);
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

// Out-degree of z restricted to masked edges.
int masked_out(const Graph& g, const std::vector<char>& mask, const std::vector<char>& forward, int z) {
    int out = 0;
    for (int e = 0; e < g.size(); ++e) {
        if (!mask[static_cast<std::size_t>(e)])
            continue;
        const Edge& ed = g.edges()[static_cast<std::size_t>(e)];
        if ((ed.u == z && forward[static_cast<std::size_t>(e)]) || (ed.v == z && !forward[static_cast<std::size_t>(e)]))
            ++out;
    }
    return out;
}

void favor_into(const Graph& g, const std::vector<char>& mask, std::vector<char>& forward, int z) {
    balance_into(g, mask, forward);
    int deg = 0;
    for (int e = 0; e < g.size(); ++e)
        if (mask[static_cast<std::size_t>(e)] &&
            (g.edges()[static_cast<std::size_t>(e)].u == z || g.edges()[static_cast<std::size_t>(e)].v == z))
            ++deg;
    if (masked_out(g, mask, forward, z) > deg / 2)
        for (int e : component_of(g, z, mask))
            forward[static_cast<std::size_t>(e)] ^= 1;
}

void check_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order())
        throw ParameterError("vertex index " + std::to_string(v) + " not in graph");
}

} // namespace

Orientation balanced_orientation(const Graph& g) {
    std::vector<char> forward(static_cast<std::size_t>(g.size()), 1);
    balance_into(g, std::vector<char>(static_cast<std::size_t>(g.size()), 1), forward);
    Orientation d(g, std::move(forward));
    if (!d.is_balanced())
        throw GraphError("balanced orientation audit failed");
    return d;
}

Orientation favored_orientation(const Graph& g, int z) {
    check_vertex(g, z);
    std::vector<char> forward(static_cast<std::size_t>(g.size()), 1);
    favor_into(g, std::vector<char>(static_cast<std::size_t>(g.size()), 1), forward, z);
    Orientation d(g, std::move(forward));
    if (!d.is_balanced() || d.out_degree(z) > g.degree(z) / 2)
        throw GraphError("favored orientation audit failed");
    return d;
}

Orientation odd_set_orientation(const Graph& g, std::vector<int> Z, int k) {
    if (k < 1)
        throw PreconditionError("odd_set_orientation needs k >= 1");
    for (int z : Z)
        check_vertex(g, z);
    std::sort(Z.begin(), Z.end());
    if (std::adjacent_find(Z.begin(), Z.end()) != Z.end())
        throw PreconditionError("Z has repeated vertices");
    if (static_cast<int>(Z.size()) != k)
        throw PreconditionError("|Z| = " + std::to_string(Z.size()) + " but k = " + std::to_string(k));
    if (!is_connected(g))
        throw PreconditionError("odd_set_orientation needs a connected graph");
    std::vector<int> odd;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) % 2)
            odd.push_back(v);
    if (static_cast<int>(odd.size()) != 2 * k)
        throw PreconditionError("graph has " + std::to_string(odd.size()) + " odd vertices, need 2k = " +
                                std::to_string(2 * k));
    for (int z : Z)
        if (g.degree(z) % 2 == 0)
            throw PreconditionError("vertex " + g.label(z).str() + " in Z has even degree");
    if (k >= 2 && edge_connectivity(g) < k - 1)
        throw PreconditionError("graph is not " + std::to_string(k - 1) + "-edge-connected");

    const int zstar = Z.back();
    std::vector<int> sources(Z.begin(), Z.end() - 1);
    std::vector<int> sinks;
    for (int v : odd)
        if (!std::binary_search(Z.begin(), Z.end(), v))
            sinks.push_back(v);
    const DisjointPaths paths = edge_disjoint_paths(g, sources, sinks);
    if (paths.value != k - 1)
        throw PreconditionError("only " + std::to_string(paths.value) + " edge-disjoint paths found, need " +
                                std::to_string(k - 1));

    std::vector<char> mask(static_cast<std::size_t>(g.size()), 1);
    for (const auto& p : paths.paths)
        for (int e : p.edges)
            mask[static_cast<std::size_t>(e)] = 0;
    std::vector<char> forward(static_cast<std::size_t>(g.size()), 1);
    favor_into(g, mask, forward, zstar);
    // each path is directed from its far end back to its start in Z
    for (const auto& p : paths.paths)
        for (std::size_t i = 0; i < p.edges.size(); ++i) {
            const int e = p.edges[i];
            const int from = p.vertices[i + 1];
            forward[static_cast<std::size_t>(e)] = from == g.edges()[static_cast<std::size_t>(e)].u ? 1 : 0;
        }
    Orientation d(g, std::move(forward));
    bool ok = d.is_balanced();
    for (int z : Z)
        ok = ok && d.out_degree(z) <= g.degree(z) / 2;
    if (!ok)
        throw GraphError("odd-set orientation audit failed");
    return d;
}

AlonTarsiCounts alon_tarsi_counts(const Orientation& d) {
    const Graph& g = d.base();
    const int m = g.size();
    if (m > kAlonTarsiMaxEdges)
        throw PreconditionError("alon_tarsi_counts is limited to " + std::to_string(kAlonTarsiMaxEdges) +
                                " edges, got " + std::to_string(m));
    std::vector<int> bal(static_cast<std::size_t>(g.order()), 0); // out - in over chosen arcs
    int nonzero = 0;
    AlonTarsiCounts c;
    c.even = 1; // empty subgraph
    std::uint64_t gray = 0;
    const std::uint64_t limit = std::uint64_t{1} << m;
    auto bump = [&](int v, int delta) {
        int& b = bal[static_cast<std::size_t>(v)];
        if (b == 0)
            ++nonzero;
        b += delta;
        if (b == 0)
            --nonzero;
    };
    for (std::uint64_t i = 1; i < limit; ++i) {
        const int e = std::countr_zero(i);
        gray ^= std::uint64_t{1} << e;
        const int sign = (gray >> e) & 1U ? 1 : -1;
        bump(d.tail(e), sign);
        bump(d.head(e), -sign);
        if (nonzero == 0) {
            if (std::popcount(gray) % 2 == 0)
                ++c.even;
            else
                ++c.odd;
        }
    }
    return c;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace

HarnessReport at_bound_harness(const Graph& g, const HarnessOptions& opts) {
    if (!is_bipartite(g))
        throw PreconditionError("at_bound_harness needs a bipartite graph");
    if (opts.favored)
        check_vertex(g, *opts.favored);
    std::vector<int> universe;
    if (opts.universe) {
        universe = *opts.universe;
    } else {
        for (int c = 1; c <= g.max_degree() + 2; ++c)
            universe.push_back(c);
    }
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

    const int n = g.order();
    std::vector<int> size(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        size[static_cast<std::size_t>(v)] = (g.degree(v) + 1) / 2 + 1;
    if (opts.favored)
        size[static_cast<std::size_t>(*opts.favored)] = g.degree(*opts.favored) / 2 + 1;
    for (int s : size)
        if (s > static_cast<int>(universe.size()))
            throw PreconditionError("universe too small for the required list sizes");

    HarnessReport rep;
    rep.trials = opts.trials;
    const Orientation d = opts.favored ? favored_orientation(g, *opts.favored) : balanced_orientation(g);
    rep.orientation_ok = true;
    for (int v = 0; v < n; ++v)
        rep.orientation_ok = rep.orientation_ok && d.out_degree(v) + 1 <= size[static_cast<std::size_t>(v)];

    auto trial_lists = [&](int t) {
        std::mt19937_64 rng(splitmix(opts.seed ^ splitmix(static_cast<std::uint64_t>(t))));
        ListAssignment la;
        la.universe = universe;
        la.lists.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& l = la.lists[static_cast<std::size_t>(v)];
            std::sample(universe.begin(), universe.end(), std::back_inserter(l), size[static_cast<std::size_t>(v)], rng);
        }
        return la;
    };

    const unsigned threads = std::max(1U, opts.threads);
    std::vector<Outcome> outcomes(static_cast<std::size_t>(std::max(0, opts.trials)));
    auto worker = [&](unsigned id) {
        for (int t = static_cast<int>(id); t < opts.trials; t += static_cast<int>(threads))
            outcomes[static_cast<std::size_t>(t)] = list_colorable(g, trial_lists(t)).outcome;
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i)
        pool.emplace_back(worker, i);
    worker(0);
    for (auto& th : pool)
        th.join();
    for (int t = 0; t < opts.trials; ++t) {
        switch (outcomes[static_cast<std::size_t>(t)]) {
        case Outcome::feasible: ++rep.feasible; break;
        case Outcome::infeasible:
            ++rep.infeasible;
            if (!rep.counterexample)
                rep.counterexample = trial_lists(t);
            break;
        case Outcome::unknown: ++rep.unknown; break;
        }
    }
    return rep;
}

} // namespace sqlab
