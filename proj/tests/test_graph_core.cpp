#include "oracles.hpp"

#include "sqlab/errors.hpp"
#include "sqlab/families.hpp"
#include "sqlab/structure.hpp"
#include "sqlab/transforms.hpp"

#include <doctest.h>

#include <numeric>

using namespace sqlab;

namespace {

VertexLabel w(int i) { return VertexLabel::atom(Role::w, {i}); }

Graph two_squares_sharing_edge() {
    // 4-cycles 1-2-3-4 and 1-2-5-6 share the edge 12
    return build_graph({w(1), w(2), w(3), w(4), w(5), w(6)},
                       {{w(1), w(2)}, {w(2), w(3)}, {w(3), w(4)}, {w(4), w(1)}, {w(2), w(5)}, {w(5), w(6)}, {w(6), w(1)}});
}

} // namespace

TEST_CASE("build_graph basics and errors") {
    std::vector<std::pair<VertexLabel, VertexLabel>> k4;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            k4.emplace_back(w(i), w(j));
    Graph g = build_graph({w(1), w(2), w(3), w(4)}, k4);
    CHECK(g.order() == 4);
    CHECK(g.size() == 6);
    CHECK(g.is_simple());

    Graph multi = build_graph({w(1), w(2)}, {{w(1), w(2)}, {w(1), w(2)}});
    CHECK_FALSE(multi.is_simple());
    CHECK(multi.multiplicity(0, 1) == 2);

    CHECK_THROWS_AS(build_graph({w(1)}, {{w(1), w(1)}}), GraphError);
    CHECK_THROWS_AS(build_graph({w(1), w(1)}, {}), GraphError);
    CHECK_THROWS_AS(build_graph({w(1)}, {{w(1), w(2)}}), GraphError);
}

TEST_CASE("labels print and parse back") {
    const VertexLabel sub = VertexLabel::composite(Role::subdivision, w(1), w(2));
    const VertexLabel line = VertexLabel::composite(Role::line, w(1), sub);
    const VertexLabel copy = VertexLabel::composite(Role::line, VertexLabel::atom(Role::chain, {1}),
                                                    VertexLabel::atom(Role::chain, {2}), 1);
    for (const auto& l : {w(3), VertexLabel::atom(Role::x_prime, {2}), VertexLabel::atom(Role::part, {2, 1}), sub, line,
                          copy, VertexLabel::atom(Role::x)}) {
        CAPTURE(l.str());
        CHECK(VertexLabel::parse(l.str()) == l);
    }
    CHECK(line.str() == "line(w[1],sub(w[1],w[2]))");
    CHECK(copy.str() == "line(c[1],c[2])#1");
    CHECK_THROWS(VertexLabel::parse("q[1]"));
    CHECK_THROWS(VertexLabel::parse("x[1"));
}

TEST_CASE("bipartition and odd closed walks") {
    auto c4 = is_bipartite(cycle_graph(4));
    REQUIRE(c4);
    CHECK(c4->left.size() == 2);
    CHECK(c4->right.size() == 2);
    CHECK_FALSE(is_bipartite(complete_graph(3)));

    const Graph g = girth6_cubic(8);
    auto parts = is_bipartite(g);
    REQUIRE(parts);
    CHECK(parts->left.size() == 8);
    CHECK(parts->right.size() == 8);
    for (int v : parts->left)
        CHECK(g.label(v).role == g.label(parts->left.front()).role);

    // bipartition is valid / odd walk really is an odd closed walk
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph r = oracle::random_graph(9, 0.3, rng);
        auto bp = is_bipartite(r);
        CHECK(bp.has_value() == oracle::is_bipartite_bruteforce(r));
        if (bp) {
            std::vector<int> side(static_cast<std::size_t>(r.order()), -1);
            for (int v : bp->left)
                side[static_cast<std::size_t>(v)] = 0;
            for (int v : bp->right)
                side[static_cast<std::size_t>(v)] = 1;
            for (const auto& e : r.edges())
                CHECK(side[static_cast<std::size_t>(e.u)] != side[static_cast<std::size_t>(e.v)]);
            CHECK_FALSE(odd_closed_walk(r));
        } else {
            auto walk = odd_closed_walk(r);
            REQUIRE(walk);
            CHECK(walk->size() % 2 == 1);
            for (std::size_t i = 0; i < walk->size(); ++i)
                CHECK(r.adjacent((*walk)[i], (*walk)[(i + 1) % walk->size()]));
        }
    }
}

TEST_CASE("girth") {
    CHECK(girth(girth6_cubic(8)) == 6);
    CHECK(girth(subdivision(complete_graph(4))) == 6);
    CHECK(oracle::girth(subdivision(complete_graph(4))) == 6);
    CHECK_FALSE(girth(path_graph(5)));
    CHECK(girth(p_nk_multigraph(1, 2)) == 2);
    CHECK(girth(gen_petersen(5, 2)) == 5);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph r = oracle::random_graph(10, 0.22, rng);
        CHECK(girth(r) == oracle::girth(r));
        for (int len = 3; len <= 6; ++len)
            if (auto gg = girth(r); gg && *gg == len)
                CHECK(has_cycle_of_length(r, len));
    }
    CHECK_FALSE(has_cycle_of_length(girth6_cubic(8), 4));
}

TEST_CASE("clique number against subset sweep") {
    CHECK(clique_number(square(girth6_cubic(8))) == 4);
    CHECK(clique_number(square(line_graph(subdivision(complete_graph(6))))) == 6);
    CHECK(clique_number(complete_graph(5)) == 5);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 9);
        const Graph r = oracle::random_graph(n, 0.2 + 0.06 * static_cast<double>(trial % 10), rng);
        CHECK(clique_number(r) == oracle::clique_number(r));
        const auto q = maximum_clique(r);
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = i + 1; j < q.size(); ++j)
                CHECK(r.adjacent(q[i], q[j]));
    }
}

TEST_CASE("claw-freeness") {
    CHECK(is_claw_free(line_graph(subdivision(complete_graph(4)))));
    CHECK_FALSE(is_claw_free(complete_multipartite({1, 3})));
    CHECK(is_claw_free(line_graph(gen_petersen(10, 3))));
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph r = oracle::random_graph(4 + static_cast<int>(rng() % 9), 0.35, rng);
        CHECK(is_claw_free(r) == oracle::claw_free(r));
    }
}

TEST_CASE("independent sets of a given size") {
    const Graph s = square(line_graph(subdivision(complete_graph(4))));
    CHECK(maximum_independent_sets(s, 3).size() == 4);
    CHECK(independence_number(s) == 3);
    CHECK(maximum_independent_sets(complete_graph(4), 2).empty());
    CHECK(maximum_independent_sets(cycle_graph(6), 3).size() == 2);
    CHECK(oracle::independent_sets(cycle_graph(6), 3).size() == 2);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph r = oracle::random_graph(9, 0.3, rng);
        for (int size = 1; size <= 4; ++size)
            CHECK(maximum_independent_sets(r, size) == oracle::independent_sets(r, size));
    }
}

TEST_CASE("complement and complete multipartite recognition") {
    CHECK(is_complete_multipartite(square(line_graph(gen_petersen(5, 2)))) == std::vector<int>{3, 3, 3, 3, 3});
    CHECK_FALSE(is_complete_multipartite(cycle_graph(5)));
    CHECK(is_complete_multipartite(complete_multipartite({2, 2, 2})) == std::vector<int>{2, 2, 2});
    CHECK(is_complete_multipartite(complete_multipartite({1, 3, 2})) == std::vector<int>{1, 2, 3});
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph r = oracle::random_graph(8, 0.5, rng);
        CHECK(complement(complement(r)) == r);
    }
}

TEST_CASE("handshake identity and structure report") {
    for (const Graph& g : {girth6_cubic(8), planar_cubic(12), gen_petersen(10, 3), sharpness_graph(3),
                           p_nk_multigraph(2, 4), chained_line_family(4, 2), two_squares_sharing_edge()}) {
        int sum = 0;
        for (int v = 0; v < g.order(); ++v)
            sum += g.degree(v);
        CHECK(sum == 2 * g.size());
        if (g.is_simple()) {
            const auto rep = structure_report(g);
            CHECK(rep.clique_number <= rep.max_degree + 1);
            if (rep.girth)
                CHECK(*rep.girth >= 3);
        }
    }
    const auto rep = structure_report(girth6_cubic(8));
    CHECK(rep.is_bipartite);
    CHECK(rep.regular_degree == 3);
    CHECK(rep.girth == 6);
    CHECK(rep.clique_number == 2);
}
