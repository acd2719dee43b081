#include "sqlab/observ.hpp"

#include "sqlab/errors.hpp"
#include "sqlab/families.hpp"
#include "sqlab/structure.hpp"
#include "sqlab/transforms.hpp"

#include <algorithm>
#include <random>

namespace sqlab {

std::vector<int> petersen_10_3_edge_coloring() {
    const Graph p = gen_petersen(10, 3);
    const Graph line = line_graph(p);
    const Graph sq = square(line);
    SolveOptions opts;
    opts.deterministic = true;
    const std::vector<int> five{1, 2, 3, 4, 5};
    Verdict v = list_colorable(sq, uniform_lists(sq.order(), five, five), opts);
    if (!v.feasible())
        throw GraphError("no strong 5-edge-coloring of P(10,3) found");
    std::vector<int> colors;
    for (const Edge& e : p.edges())
        colors.push_back(v.witness->of(line_vertex(line, p.label(e.u), p.label(e.v))));
    return colors;
}

ListAssignment observ_forbidden_lists(const Graph& p10_3, const std::vector<int>& edge_colors) {
    const ListAssignment incident = lists_observ(p10_3, edge_colors);
    ListAssignment f;
    f.mode = ListMode::forbidden;
    f.universe = {1, 2, 3, 4, 5};
    for (const auto& l : incident.lists) {
        std::vector<int> missing;
        for (int c = 1; c <= 5; ++c)
            if (!std::binary_search(l.begin(), l.end(), c))
                missing.push_back(c);
        f.lists.push_back(std::move(missing));
    }
    return f;
}

namespace {

std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

ObservGadget make_gadget(const Graph& base, const std::vector<char>& side, const ListAssignment& base_lists,
                         const ObservOptions& opts, int index) {
    std::mt19937_64 rng(mix(opts.seed ^ mix(static_cast<std::uint64_t>(index) + 1)));
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const int n0 = base.order();
    const int extra = uniform(1, std::max(1, opts.max_new_vertices));
    std::vector<VertexLabel> labels = base.labels();
    std::vector<char> sides = side;
    for (int i = 1; i <= extra; ++i) {
        labels.push_back(VertexLabel::atom(Role::z, {i}));
        sides.push_back(static_cast<char>(uniform(0, 1)));
    }
    const int n = n0 + extra;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : base.edges()) {
        edges.emplace_back(e.u, e.v);
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    const int want = uniform(1, std::max(1, opts.max_new_edges));
    for (int attempt = 0, added = 0; added < want && attempt < 20 * want; ++attempt) {
        const int u = uniform(n0, n - 1); // every new edge touches the gadget
        const int v = uniform(0, n - 1);
        if (u == v || sides[static_cast<std::size_t>(u)] == sides[static_cast<std::size_t>(v)])
            continue;
        if (deg[static_cast<std::size_t>(u)] >= opts.degree_cap || deg[static_cast<std::size_t>(v)] >= opts.degree_cap)
            continue;
        const auto key = std::minmax(u, v);
        if (std::find(edges.begin(), edges.end(), std::pair<int, int>(key.first, key.second)) != edges.end())
            continue;
        edges.emplace_back(key.first, key.second);
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
        ++added;
    }
    ObservGadget gad;
    gad.index = index;
    gad.graph = Graph::from_indices(std::move(labels), std::move(edges));
    gad.lists = base_lists;
    for (int i = 0; i < extra; ++i) {
        std::vector<int> pick;
        const std::vector<int> five{1, 2, 3, 4, 5};
        std::sample(five.begin(), five.end(), std::back_inserter(pick), 2, rng);
        gad.lists.lists.push_back(std::move(pick));
    }
    return gad;
}

} // namespace

ObservReport observ_search(const std::optional<std::vector<int>>& edge_coloring, const ObservOptions& opts) {
    const Graph base = gen_petersen(10, 3);
    ObservReport rep;
    rep.edge_coloring = edge_coloring ? *edge_coloring : petersen_10_3_edge_coloring();
    const ListAssignment lists = observ_forbidden_lists(base, rep.edge_coloring);
    rep.base_verdict = avoid_colorable(base, 5, lists, opts.solve);
    if (rep.base_verdict.budget_hit())
        ++rep.unknown;

    const auto parts = is_bipartite(base);
    if (!parts)
        throw GraphError("P(10,3) is expected to be bipartite");
    std::vector<char> side(static_cast<std::size_t>(base.order()), 0);
    for (int v : parts->right)
        side[static_cast<std::size_t>(v)] = 1;

    for (int i = 0; i < opts.gadget_budget; ++i) {
        ObservGadget gad = make_gadget(base, side, lists, opts, i);
        gad.verdict = avoid_colorable(gad.graph, 5, gad.lists, opts.solve);
        ++rep.tried;
        if (gad.verdict.budget_hit()) {
            ++rep.unknown;
            continue;
        }
        if (gad.verdict.infeasible()) {
            // independent re-check with a fresh single-threaded solve
            SolveOptions again;
            if (!avoid_colorable(gad.graph, 5, gad.lists, again).infeasible())
                throw GraphError("observation gadget verdict did not reproduce");
            rep.witnesses.push_back(std::move(gad));
        }
    }
    return rep;
}

} // namespace sqlab
