#include "oracles.hpp"

#include "sqlab/errors.hpp"
#include "sqlab/families.hpp"
#include "sqlab/maxflow.hpp"
#include "sqlab/orientation.hpp"
#include "sqlab/structure.hpp"

#include <doctest.h>

using namespace sqlab;

namespace {

Graph cube() {
    std::vector<VertexLabel> labels;
    for (int i = 0; i < 8; ++i)
        labels.push_back(VertexLabel::atom(Role::w, {i + 1}));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 8; ++i)
        for (int b = 0; b < 3; ++b)
            if (int j = i ^ (1 << b); i < j)
                edges.emplace_back(i, j);
    return Graph::from_indices(std::move(labels), std::move(edges));
}

void audit(const Orientation& d) {
    const Graph& g = d.base();
    for (int v = 0; v < g.order(); ++v) {
        CHECK(d.in_degree(v) + d.out_degree(v) == g.degree(v));
        CHECK(std::abs(d.out_degree(v) - d.in_degree(v)) <= 1);
        CHECK(d.out_degree(v) <= (g.degree(v) + 1) / 2);
    }
}

} // namespace

TEST_CASE("balanced orientations") {
    const Orientation c4 = balanced_orientation(cycle_graph(4));
    for (int v = 0; v < 4; ++v)
        CHECK(c4.out_degree(v) == 1);
    for (const Graph& g : {complete_graph(4), girth6_cubic(8)}) {
        const Orientation d = balanced_orientation(g);
        audit(d);
        for (int v = 0; v < g.order(); ++v) {
            CHECK(d.out_degree(v) >= 1);
            CHECK(d.out_degree(v) <= 2);
        }
    }
    audit(balanced_orientation(p_nk_multigraph(2, 3)));
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 100; ++trial)
        audit(balanced_orientation(oracle::random_graph(10, 0.3, rng)));
}

TEST_CASE("favored orientations") {
    const Graph star = complete_multipartite({1, 3});
    const Orientation s = favored_orientation(star, 0);
    CHECK(s.out_degree(0) <= 1);
    const Graph p2 = path_graph(2);
    CHECK(favored_orientation(p2, 0).out_degree(0) == 0);
    CHECK(favored_orientation(p2, 1).out_degree(1) == 0);
    CHECK_THROWS_AS(favored_orientation(p2, 5), ParameterError);
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_connected_bipartite(12, 0.3, rng);
        const int z = static_cast<int>(rng() % 12);
        const Orientation d = favored_orientation(g, z);
        audit(d);
        CHECK(d.out_degree(z) <= g.degree(z) / 2);
    }
}

TEST_CASE("reversal swaps in and out degrees") {
    std::mt19937_64 rng(61);
    const Graph g = oracle::random_graph(9, 0.4, rng);
    const Orientation d = balanced_orientation(g);
    const Orientation r = d.reversed();
    for (int v = 0; v < g.order(); ++v) {
        CHECK(r.out_degree(v) == d.in_degree(v));
        CHECK(r.in_degree(v) == d.out_degree(v));
    }
    CHECK(r.reversed().arcs() == d.arcs());
}

TEST_CASE("edge-disjoint paths and connectivity") {
    CHECK(edge_connectivity(complete_graph(4)) == 3);
    CHECK(edge_connectivity(cube()) == 3);
    CHECK(edge_connectivity(cycle_graph(5)) == 2);
    CHECK(edge_connectivity(path_graph(4)) == 1);
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracle::random_graph(7, 0.5, rng);
        CHECK(edge_connectivity(g) == oracle::edge_connectivity(g, 7));
    }
    const Graph k4 = complete_graph(4);
    const DisjointPaths p = edge_disjoint_paths(k4, {0, 1}, {2, 3});
    CHECK(p.value == 2);
    std::vector<int> used(static_cast<std::size_t>(k4.size()), 0);
    for (const auto& path : p.paths) {
        CHECK((path.vertices.front() == 0 || path.vertices.front() == 1));
        CHECK((path.vertices.back() == 2 || path.vertices.back() == 3));
        for (int e : path.edges)
            ++used[static_cast<std::size_t>(e)];
    }
    for (int u : used)
        CHECK(u <= 1);
}

TEST_CASE("odd-set orientations") {
    const Graph k4 = complete_graph(4);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            const Orientation d = odd_set_orientation(k4, {a, b}, 2);
            audit(d);
            CHECK(d.out_degree(a) <= 1);
            CHECK(d.out_degree(b) <= 1);
        }
    CHECK_THROWS_AS(odd_set_orientation(cycle_graph(4), {0, 1}, 2), PreconditionError);
    CHECK_THROWS_AS(odd_set_orientation(cube(), {0, 3}, 2), PreconditionError);
    // all 8 cube vertices are odd: k = 4 with Z on one side
    const Orientation q = odd_set_orientation(cube(), {0, 3, 5, 6}, 4);
    audit(q);
    for (int z : {0, 3, 5, 6})
        CHECK(q.out_degree(z) <= 1);
    CHECK_THROWS_AS(odd_set_orientation(k4, {0, 1}, 3), PreconditionError);
    CHECK_THROWS_AS(odd_set_orientation(k4, {0, 0}, 2), PreconditionError);
    // every k-subset of the odd vertices of a few random odd-rich graphs
    std::mt19937_64 rng(71);
    int done = 0;
    for (int trial = 0; trial < 200 && done < 25; ++trial) {
        const Graph g = oracle::random_graph(8, 0.6, rng);
        std::vector<int> odd;
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) % 2)
                odd.push_back(v);
        const int k = static_cast<int>(odd.size()) / 2;
        if (k < 2 || !is_connected(g) || edge_connectivity(g) < k - 1)
            continue;
        std::vector<int> Z(odd.begin(), odd.begin() + k);
        const Orientation d = odd_set_orientation(g, Z, k);
        audit(d);
        for (int z : Z)
            CHECK(d.out_degree(z) <= g.degree(z) / 2);
        ++done;
    }
    CHECK(done > 0);
}

TEST_CASE("Alon-Tarsi counts") {
    const auto c4 = alon_tarsi_counts(balanced_orientation(cycle_graph(4)));
    CHECK(c4.even == 2);
    CHECK(c4.odd == 0);
    const auto e = alon_tarsi_counts(balanced_orientation(path_graph(2)));
    CHECK(e.even == 1);
    CHECK(e.odd == 0);
    const auto c3 = alon_tarsi_counts(balanced_orientation(cycle_graph(3)));
    CHECK(c3.even == 1);
    CHECK(c3.odd == 1);

    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = oracle::random_graph(7, 0.45, rng);
        if (g.size() > 14)
            continue;
        const Orientation d = balanced_orientation(g);
        const auto at = alon_tarsi_counts(d);
        const auto ref = oracle::eulerian_subgraphs(g.order(), d.arcs());
        CHECK(at.even == ref.first);
        CHECK(at.odd == ref.second);
    }
    CHECK_THROWS_AS(alon_tarsi_counts(balanced_orientation(complete_graph(8))), PreconditionError);
}

TEST_CASE("list-size harness") {
    HarnessOptions opts;
    opts.trials = 300;
    opts.seed = 99;
    const auto k33 = at_bound_harness(complete_multipartite({3, 3}), opts);
    CHECK(k33.ok());
    CHECK(k33.feasible == 300);

    const Graph g8 = girth6_cubic(8);
    opts.favored = 0;
    const auto fav = at_bound_harness(g8, opts);
    CHECK(fav.ok());

    HarnessOptions c6;
    c6.trials = 200;
    const auto cyc = at_bound_harness(cycle_graph(6), c6);
    CHECK(cyc.ok());

    // reproducible regardless of thread count
    HarnessOptions a = opts, b = opts;
    b.threads = 3;
    const auto ra = at_bound_harness(g8, a), rb = at_bound_harness(g8, b);
    CHECK(ra.feasible == rb.feasible);

    CHECK_THROWS_AS(at_bound_harness(cycle_graph(5), c6), PreconditionError);
}
