#include "oracles.hpp"

#include "sqlab/errors.hpp"
#include "sqlab/families.hpp"
#include "sqlab/solver.hpp"
#include "sqlab/structure.hpp"
#include "sqlab/transforms.hpp"

#include <doctest.h>

using namespace sqlab;

TEST_CASE("powers") {
    const Graph c5sq = square(cycle_graph(5));
    CHECK(c5sq.size() == 10); // K5
    CHECK(regular_degree(c5sq) == 4);
    const Graph g = girth6_cubic(8);
    CHECK(power(g, 1) == g);
    const Graph sq = square(g);
    for (int i = 1; i <= 8; ++i)
        for (int d = 1; d <= 3; ++d) {
            const int a = g.index_of(VertexLabel::atom(Role::x, {i}));
            const int b = g.index_of(VertexLabel::atom(Role::x, {(i + d - 1) % 8 + 1}));
            CHECK(sq.adjacent(a, b));
        }
    CHECK_THROWS_AS(power(p_nk_multigraph(1, 2), 2), GraphError);

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph r = oracle::random_graph(9, 0.25, rng);
        // monotone in k, and complete per component at the diameter
        for (int k = 1; k < 5; ++k) {
            const Graph a = power(r, k), b = power(r, k + 1);
            for (const auto& e : a.edges())
                CHECK(b.adjacent(e.u, e.v));
        }
        const Graph big = power(r, 9);
        for (const auto& comp : connected_components(r))
            for (std::size_t i = 0; i < comp.size(); ++i)
                for (std::size_t j = i + 1; j < comp.size(); ++j)
                    CHECK(big.adjacent(comp[i], comp[j]));
    }
}

TEST_CASE("line graphs") {
    const Graph l4 = line_graph(subdivision(complete_graph(4)));
    CHECK(l4.order() == 12);
    CHECK(regular_degree(l4) == 3);
    const Graph l6 = line_graph(subdivision(complete_graph(6)));
    CHECK(l6.order() == 30);
    CHECK(regular_degree(l6) == 5);
    const Graph p3 = line_graph(path_graph(3));
    CHECK(p3.order() == 2);
    CHECK(p3.size() == 1);

    // parallel edges become adjacent vertices
    const Graph lm = line_graph(p_nk_multigraph(1, 2));
    CHECK(lm.is_simple());
    CHECK(lm.order() == p_nk_multigraph(1, 2).size());

    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph r = oracle::random_graph(8, 0.35, rng);
        const Graph l = line_graph(r);
        for (int e = 0; e < r.size(); ++e) {
            const auto& ed = r.edges()[static_cast<std::size_t>(e)];
            const int v = line_vertex(l, r.label(ed.u), r.label(ed.v));
            REQUIRE(v >= 0);
            CHECK(l.degree(v) == r.degree(ed.u) + r.degree(ed.v) - 2);
            CHECK(l.label(v).ends.size() == 2);
        }
    }
}

TEST_CASE("subdivision") {
    const Graph s4 = subdivision(complete_graph(4));
    CHECK(s4.order() == 10);
    CHECK(s4.size() == 12);
    CHECK(is_bipartite(s4));
    const Graph se = subdivision(path_graph(2));
    CHECK(se.order() == 3);
    CHECK(se.size() == 2);
    const Graph s6 = subdivision(complete_graph(6));
    CHECK(s6.order() == 21);
    CHECK(s6.size() == 30);
}

TEST_CASE("total graph is the square of the subdivision") {
    CHECK(total_graph(complete_graph(3)) == square(subdivision(complete_graph(3))));
    CHECK(total_graph(complete_graph(3)).order() == 6);
    const Graph te = total_graph(path_graph(2));
    CHECK(te.order() == 3);
    CHECK(te.size() == 3);
    CHECK(total_graph(complete_graph(4)).max_degree() == 6);
    CHECK_THROWS_AS(total_graph(p_nk_multigraph(1, 2)), GraphError);

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Graph r = oracle::random_graph(n, 0.4, rng);
        const Graph t = total_graph(r);
        CHECK(t == square(subdivision(r)));
        if (r.size() == 0)
            continue;
        // Delta+1 <= chi(T) and Delta(T) <= 2 Delta
        CHECK(chromatic_number(t).value >= r.max_degree() + 1);
        CHECK(t.max_degree() <= 2 * r.max_degree());
    }
}

TEST_CASE("transform names") {
    const Graph k4 = complete_graph(4);
    CHECK(apply_chain(k4, {"subdivide", "line", "square"}) == square(line_graph(subdivision(k4))));
    CHECK(apply_transform(k4, "total") == total_graph(k4));
    CHECK_THROWS_AS(apply_transform(k4, "cube"), ParameterError);
}
