#include "sqlab/choosability.hpp"

#include "sqlab/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>

namespace sqlab {

namespace {

// Vertices left after repeatedly removing those with degree < k; returned
// in index order.
std::vector<int> k_core(const Graph& g, int k) {
    const int n = g.order();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    for (int v = 0; v < n; ++v)
        deg[static_cast<std::size_t>(v)] = static_cast<int>(g.neighbor_set(v).count());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v)
            if (alive[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] < k) {
                alive[static_cast<std::size_t>(v)] = 0;
                changed = true;
                g.neighbor_set(v).for_each([&](std::size_t w) { --deg[w]; });
            }
    }
    std::vector<int> core;
    for (int v = 0; v < n; ++v)
        if (alive[static_cast<std::size_t>(v)])
            core.push_back(v);
    return core;
}

Graph induced(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
    std::vector<VertexLabel> labels;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        pos[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
        labels.push_back(g.label(vertices[i]));
    }
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges())
        if (pos[static_cast<std::size_t>(e.u)] >= 0 && pos[static_cast<std::size_t>(e.v)] >= 0)
            edges.emplace_back(pos[static_cast<std::size_t>(e.u)], pos[static_cast<std::size_t>(e.v)]);
    return Graph::from_indices(std::move(labels), std::move(edges));
}

// All k-subsets of {1..hi} whose colors above `used` are exactly
// used+1..used+j for some j (first-use canonical form).
std::vector<std::vector<int>> canonical_lists(int k, int used, int cap) {
    std::vector<std::vector<int>> out;
    for (int fresh = 0; fresh <= k && used + fresh <= cap; ++fresh) {
        const int old = k - fresh;
        if (old > used)
            continue;
        // choose `old` colors from 1..used
        std::vector<int> pick;
        std::function<void(int)> rec = [&](int from) {
            if (static_cast<int>(pick.size()) == old) {
                std::vector<int> list = pick;
                for (int c = used + 1; c <= used + fresh; ++c)
                    list.push_back(c);
                out.push_back(std::move(list));
                return;
            }
            for (int c = from; c <= used; ++c) {
                pick.push_back(c);
                rec(c + 1);
                pick.pop_back();
            }
        };
        rec(1);
    }
    return out;
}

// Plain backtracking over bitmask lists for cores that fit in 64 vertices
// and 64 colors; the full engine's setup cost dominates on these tiny
// prefix checks.
class SmallChecker {
public:
    explicit SmallChecker(const Graph& core) : n_(core.order()), adj_(static_cast<std::size_t>(n_), 0) {
        for (const Edge& e : core.edges()) {
            adj_[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
            adj_[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
        }
        color_.assign(static_cast<std::size_t>(n_), 0);
    }

    // Is the prefix 0..count-1 colorable from `lists` (color bitmasks)?
    bool colorable(const std::vector<std::uint64_t>& lists, int count, std::uint64_t& nodes) {
        return rec(lists, 0, count, nodes);
    }

private:
    bool rec(const std::vector<std::uint64_t>& lists, int v, int count, std::uint64_t& nodes) {
        if (v == count)
            return true;
        std::uint64_t blocked = 0;
        for (std::uint64_t nb = adj_[static_cast<std::size_t>(v)] & ((std::uint64_t{1} << v) - 1); nb; nb &= nb - 1)
            blocked |= color_[static_cast<std::size_t>(std::countr_zero(nb))];
        for (std::uint64_t free = lists[static_cast<std::size_t>(v)] & ~blocked; free; free &= free - 1) {
            ++nodes;
            color_[static_cast<std::size_t>(v)] = free & (~free + 1);
            if (rec(lists, v + 1, count, nodes))
                return true;
        }
        return false;
    }

    int n_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::uint64_t> color_;
};

} // namespace

ChoosabilityResult is_k_choosable(const Graph& g, int k, int universe_cap, const SolveOptions& opts) {
    if (k < 1 || universe_cap < k)
        throw ParameterError("is_k_choosable needs k >= 1 and universe_cap >= k");
    ChoosabilityResult out;
    const auto core = k_core(g, k);
    std::vector<int> universe;
    for (int c = 1; c <= universe_cap; ++c)
        universe.push_back(c);

    if (core.empty()) {
        out.choosable = true;
        return out;
    }
    const int m = static_cast<int>(core.size());
    std::vector<std::vector<int>> lists(static_cast<std::size_t>(m));
    std::vector<Graph> prefixes;
    for (int i = 1; i <= m; ++i)
        prefixes.push_back(induced(g, std::vector<int>(core.begin(), core.begin() + i)));

    const bool small = m <= 64 && universe_cap <= 64;
    std::optional<SmallChecker> checker;
    if (small)
        checker.emplace(prefixes.back());
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(m), 0);
    std::uint64_t nodes = 0;
    std::vector<std::vector<std::vector<int>>> choices(static_cast<std::size_t>(universe_cap) + 1);
    for (int used = 0; used <= universe_cap; ++used)
        choices[static_cast<std::size_t>(used)] = canonical_lists(k, used, universe_cap);

    auto prefix_colorable = [&](int depth) {
        if (small) {
            const bool ok = checker->colorable(masks, depth + 1, nodes);
            if (opts.node_budget && nodes > opts.node_budget)
                throw BudgetExceeded("choosability check ran out of budget");
            return ok;
        }
        ListAssignment la;
        la.universe = universe;
        la.lists.assign(lists.begin(), lists.begin() + depth + 1);
        Verdict v = list_colorable(prefixes[static_cast<std::size_t>(depth)], la, opts);
        if (v.budget_hit())
            throw BudgetExceeded("choosability check ran out of budget");
        return v.feasible();
    };

    int fail_depth = -1;
    std::function<bool(int, int)> rec = [&](int depth, int used) -> bool {
        if (depth == m)
            return true;
        for (const auto& list : choices[static_cast<std::size_t>(used)]) {
            lists[static_cast<std::size_t>(depth)] = list;
            std::uint64_t mask = 0;
            for (int c : list)
                mask |= std::uint64_t{1} << (c - 1);
            masks[static_cast<std::size_t>(depth)] = mask;
            ++out.assignments_checked;
            if (!prefix_colorable(depth)) {
                fail_depth = depth;
                return false;
            }
            const int next_used = std::max(used, list.back());
            if (!rec(depth + 1, next_used))
                return false;
        }
        return true;
    };
    if (rec(0, 0)) {
        out.choosable = true;
        out.bounded_verification = static_cast<long long>(universe_cap) < static_cast<long long>(g.order()) * k;
        return out;
    }

    // Bad prefix found: extend to the whole graph (peeled and later
    // vertices get {1..k}; feasibility of the prefix already fails).
    ListAssignment bad;
    bad.universe = universe;
    bad.lists.assign(static_cast<std::size_t>(g.order()), {});
    for (int c = 1; c <= k; ++c)
        for (auto& l : bad.lists)
            l.push_back(c);
    for (int i = 0; i <= fail_depth; ++i)
        bad.lists[static_cast<std::size_t>(core[static_cast<std::size_t>(i)])] = lists[static_cast<std::size_t>(i)];
    out.choosable = false;
    out.bad_assignment = std::move(bad);
    return out;
}

int list_chromatic_number_bounded(const Graph& g, bool* bounded) {
    int k = std::max(1, chromatic_number(g).value);
    while (true) {
        auto r = is_k_choosable(g, k, 2 * k + 1);
        if (r.choosable) {
            if (bounded)
                *bounded = r.bounded_verification;
            return k;
        }
        ++k;
    }
}

} // namespace sqlab
