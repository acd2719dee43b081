#include "sqlab/structure.hpp"

#include "sqlab/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace sqlab {

namespace {

std::vector<int> two_color(const Graph& g, std::vector<int>& parent, std::pair<int, int>& conflict) {
    const int n = g.order();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    parent.assign(static_cast<std::size_t>(n), -1);
    conflict = {-1, -1};
    for (int s = 0; s < n; ++s) {
        if (side[static_cast<std::size_t>(s)] != -1)
            continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            for (int b : g.neighbors(a)) {
                if (side[static_cast<std::size_t>(b)] == -1) {
                    side[static_cast<std::size_t>(b)] = 1 - side[static_cast<std::size_t>(a)];
                    parent[static_cast<std::size_t>(b)] = a;
                    q.push(b);
                } else if (side[static_cast<std::size_t>(b)] == side[static_cast<std::size_t>(a)] && conflict.first < 0) {
                    conflict = {a, b};
                }
            }
        }
    }
    return side;
}

// Greedy sequential coloring of the candidate set in the given order;
// returns vertices sorted by color class with their color numbers.
void color_sort(const Graph& g, const std::vector<int>& candidates, std::vector<int>& order,
                std::vector<int>& bound) {
    order.clear();
    bound.clear();
    std::vector<int> remaining = candidates;
    int color = 0;
    while (!remaining.empty()) {
        ++color;
        std::vector<int> rest;
        std::vector<int> cls;
        for (int v : remaining) {
            bool clash = false;
            for (int c : cls)
                if (g.adjacent(v, c)) {
                    clash = true;
                    break;
                }
            if (clash)
                rest.push_back(v);
            else
                cls.push_back(v);
        }
        for (int v : cls) {
            order.push_back(v);
            bound.push_back(color);
        }
        remaining = std::move(rest);
    }
}

void expand_clique(const Graph& g, std::vector<int>& current, std::vector<int> candidates, std::vector<int>& best) {
    std::vector<int> order;
    std::vector<int> bound;
    color_sort(g, candidates, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
        if (current.size() + static_cast<std::size_t>(bound[static_cast<std::size_t>(i)]) <= best.size())
            return;
        int v = order[static_cast<std::size_t>(i)];
        current.push_back(v);
        std::vector<int> next;
        for (int j = 0; j < i; ++j) {
            int w = order[static_cast<std::size_t>(j)];
            if (g.adjacent(v, w))
                next.push_back(w);
        }
        if (next.empty()) {
            if (current.size() > best.size())
                best = current;
        } else {
            expand_clique(g, current, std::move(next), best);
        }
        current.pop_back();
    }
}

} // namespace

std::optional<Bipartition> is_bipartite(const Graph& g) {
    std::vector<int> parent;
    std::pair<int, int> conflict;
    auto side = two_color(g, parent, conflict);
    if (conflict.first >= 0)
        return std::nullopt;
    Bipartition p;
    for (int v = 0; v < g.order(); ++v)
        (side[static_cast<std::size_t>(v)] == 0 ? p.left : p.right).push_back(v);
    return p;
}

std::optional<std::vector<int>> odd_closed_walk(const Graph& g) {
    std::vector<int> parent;
    std::pair<int, int> conflict;
    two_color(g, parent, conflict);
    if (conflict.first < 0)
        return std::nullopt;
    // Tree paths from both conflict ends up to the root; splice at the
    // lowest common ancestor.
    auto path_to_root = [&](int v) {
        std::vector<int> path;
        for (; v != -1; v = parent[static_cast<std::size_t>(v)])
            path.push_back(v);
        return path;
    };
    auto pa = path_to_root(conflict.first);
    auto pb = path_to_root(conflict.second);
    while (pa.size() > 1 && pb.size() > 1 && pa[pa.size() - 2] == pb[pb.size() - 2]) {
        pa.pop_back();
        pb.pop_back();
    }
    // pa.back() == pb.back() == lca
    std::vector<int> walk(pa.begin(), pa.end());
    for (auto it = pb.rbegin() + 1; it != pb.rend(); ++it)
        walk.push_back(*it);
    return walk;
}

std::optional<int> girth(const Graph& g) {
    if (!g.is_simple())
        return 2;
    const int n = g.order();
    int best = 0;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(s)] = 0;
        parent[static_cast<std::size_t>(s)] = -1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            if (best && 2 * dist[static_cast<std::size_t>(a)] + 1 >= best)
                break;
            for (int b : g.neighbors(a)) {
                if (dist[static_cast<std::size_t>(b)] == -1) {
                    dist[static_cast<std::size_t>(b)] = dist[static_cast<std::size_t>(a)] + 1;
                    parent[static_cast<std::size_t>(b)] = a;
                    q.push(b);
                } else if (parent[static_cast<std::size_t>(a)] != b) {
                    int len = dist[static_cast<std::size_t>(a)] + dist[static_cast<std::size_t>(b)] + 1;
                    if (!best || len < best)
                        best = len;
                }
            }
        }
    }
    if (!best)
        return std::nullopt;
    return best;
}

bool has_cycle_of_length(const Graph& g, int length) {
    if (length < 3 || length > 6)
        throw ParameterError("has_cycle_of_length supports lengths 3..6");
    const int n = g.order();
    // Enumerate simple paths from the smallest vertex of the cycle.
    std::vector<int> path;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::function<bool(int)> extend = [&](int v) -> bool {
        if (static_cast<int>(path.size()) == length)
            return g.adjacent(v, path.front());
        for (int w : g.neighbors(v)) {
            if (w <= path.front() || used[static_cast<std::size_t>(w)])
                continue;
            used[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            bool found = extend(w);
            path.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
            if (found)
                return true;
        }
        return false;
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        used[static_cast<std::size_t>(s)] = 1;
        bool found = extend(s);
        used[static_cast<std::size_t>(s)] = 0;
        if (found)
            return true;
    }
    return false;
}

std::vector<int> maximum_clique(const Graph& g) {
    std::vector<int> candidates(static_cast<std::size_t>(g.order()));
    std::iota(candidates.begin(), candidates.end(), 0);
    // Low-degree vertices last in the initial order, so the color bound
    // tightens quickly on the dense part.
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> current;
    std::vector<int> best;
    if (!candidates.empty())
        expand_clique(g, current, candidates, best);
    std::sort(best.begin(), best.end());
    return best;
}

int clique_number(const Graph& g) {
    return static_cast<int>(maximum_clique(g).size());
}

bool is_claw_free(const Graph& g) {
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> nb;
        g.neighbor_set(v).for_each([&](std::size_t w) { nb.push_back(static_cast<int>(w)); });
        const std::size_t d = nb.size();
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = a + 1; b < d; ++b) {
                if (g.adjacent(nb[a], nb[b]))
                    continue;
                for (std::size_t c = b + 1; c < d; ++c)
                    if (!g.adjacent(nb[a], nb[c]) && !g.adjacent(nb[b], nb[c]))
                        return false;
            }
    }
    return true;
}

std::vector<std::vector<int>> maximum_independent_sets(const Graph& g, int size) {
    std::vector<std::vector<int>> out;
    if (size < 0 || size > g.order())
        return out;
    std::vector<int> current;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(current.size()) == size) {
            out.push_back(current);
            return;
        }
        const int need = size - static_cast<int>(current.size());
        for (int v = from; v <= g.order() - need; ++v) {
            bool free = true;
            for (int c : current)
                if (g.adjacent(v, c)) {
                    free = false;
                    break;
                }
            if (!free)
                continue;
            current.push_back(v);
            rec(v + 1);
            current.pop_back();
        }
    };
    rec(0);
    return out;
}

int independence_number(const Graph& g) {
    return clique_number(complement(g));
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            if (!g.adjacent(a, b))
                edges.emplace_back(a, b);
    return Graph::from_indices(g.labels(), std::move(edges), g.tags());
}

std::optional<std::vector<int>> is_complete_multipartite(const Graph& g) {
    // Non-adjacency must be an equivalence relation: every class is an
    // independent set joined completely to everything outside it.
    const int n = g.order();
    std::vector<int> part(static_cast<std::size_t>(n), -1);
    std::vector<int> sizes;
    for (int v = 0; v < n; ++v) {
        if (part[static_cast<std::size_t>(v)] != -1)
            continue;
        int id = static_cast<int>(sizes.size());
        sizes.push_back(0);
        for (int w = v; w < n; ++w)
            if (w == v || !g.adjacent(v, w)) {
                if (part[static_cast<std::size_t>(w)] != -1)
                    return std::nullopt;
                part[static_cast<std::size_t>(w)] = id;
                ++sizes.back();
            }
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if ((part[static_cast<std::size_t>(a)] == part[static_cast<std::size_t>(b)]) == g.adjacent(a, b))
                return std::nullopt;
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)])
            continue;
        std::vector<int> comp{s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int w : g.neighbors(comp[i]))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.order() <= 1 || connected_components(g).size() == 1;
}

std::optional<int> regular_degree(const Graph& g) {
    if (g.order() == 0)
        return 0;
    int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != d)
            return std::nullopt;
    return d;
}

StructureReport structure_report(const Graph& g) {
    StructureReport r;
    r.is_bipartite = is_bipartite(g).has_value();
    r.regular_degree = regular_degree(g);
    r.girth = girth(g);
    r.clique_number = clique_number(g);
    r.is_claw_free = is_claw_free(g);
    r.max_degree = g.max_degree();
    return r;
}

} // namespace sqlab
