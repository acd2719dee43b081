#include "oracles.hpp"

#include "sqlab/errors.hpp"
#include "sqlab/families.hpp"
#include "sqlab/solver.hpp"
#include "sqlab/structure.hpp"
#include "sqlab/transforms.hpp"

#include <doctest.h>

#include <set>

using namespace sqlab;

namespace {

VertexLabel X(int i) { return VertexLabel::atom(Role::x, {i}); }
VertexLabel Y(int i) { return VertexLabel::atom(Role::y, {i}); }

void check_cubic_bipartite(const Graph& g) {
    CHECK(regular_degree(g) == 3);
    CHECK(is_bipartite(g));
    CHECK(g.size() == 3 * g.order() / 2);
}

} // namespace

TEST_CASE("girth-6 cubic family") {
    for (int n : {8, 12, 16}) {
        CAPTURE(n);
        const Graph g = girth6_cubic(n);
        CHECK(g.order() == 2 * n);
        check_cubic_bipartite(g);
        CHECK(girth(g) == 6);
        CHECK_FALSE(has_cycle_of_length(g, 4));
        CHECK_FALSE(g.has_tag(kTagClaimsNotApplicable));
    }
    CHECK(girth6_cubic(8).size() == 24);
    CHECK(girth6_cubic(10).has_tag(kTagClaimsNotApplicable));
    CHECK_THROWS_AS(girth6_cubic(7), ParameterError);
}

TEST_CASE("planar cubic family") {
    for (int n : {12, 16}) {
        const Graph g = planar_cubic(n);
        CHECK(g.order() == 2 * n);
        check_cubic_bipartite(g);
        CHECK(g.has_tag(kTagPlanarUnverified));
    }
    const Graph g = planar_cubic(12);
    const Graph sq = square(g);
    for (int i = 1; i <= 12; ++i) {
        const int j = i % 12 + 1;
        std::vector<int> q{g.index_of(X(i)), g.index_of(Y(i)), g.index_of(X(j)), g.index_of(Y(j))};
        for (std::size_t a = 0; a < q.size(); ++a)
            for (std::size_t b = a + 1; b < q.size(); ++b)
                CHECK(sq.adjacent(q[a], q[b]));
    }
    CHECK_THROWS_AS(planar_cubic(11), ParameterError);
}

TEST_CASE("generalized Petersen graphs") {
    const Graph p = gen_petersen(5, 2);
    CHECK(p.order() == 10);
    CHECK(p.size() == 15);
    CHECK(regular_degree(p) == 3);
    CHECK(girth(p) == 5);
    CHECK(is_bipartite(gen_petersen(10, 3)));
    const Graph p102 = gen_petersen(10, 2);
    CHECK_FALSE(is_bipartite(p102));
    auto walk = odd_closed_walk(p102);
    REQUIRE(walk);
    CHECK(walk->size() % 2 == 1);
    CHECK_THROWS_AS(gen_petersen(10, 5), ParameterError);
    CHECK_THROWS_AS(gen_petersen(10, 0), ParameterError);
}

TEST_CASE("complete and complete multipartite graphs") {
    CHECK(complete_graph(4).size() == 6);
    const Graph k3 = complete_multipartite({1, 1, 1});
    CHECK(k3.order() == 3);
    CHECK(k3.size() == 3);
    const Graph k35 = complete_multipartite({3, 3, 3, 3, 3});
    CHECK(k35.order() == 15);
    const auto comps = connected_components(complement(k35));
    CHECK(comps.size() == 5);
    for (const auto& c : comps)
        CHECK(c.size() == 3);
    CHECK(complement(k35).size() == 15);
}

TEST_CASE("P_{n,k} multigraphs") {
    const Graph p11 = p_nk_multigraph(1, 1);
    CHECK(p11.order() == 6);
    CHECK(p11.is_simple());
    CHECK(p11.size() == 5);
    CHECK(regular_degree(p11) == std::nullopt);
    const Graph p12 = p_nk_multigraph(1, 2);
    CHECK(p12.order() == 6);
    CHECK_FALSE(p12.is_simple());
    int parallel_pairs = 0;
    for (int u = 0; u < p12.order(); ++u)
        for (int v = u + 1; v < p12.order(); ++v)
            if (p12.multiplicity(u, v) == 2)
                ++parallel_pairs;
    CHECK(parallel_pairs == 1);
    CHECK(p12.size() == 6);
    CHECK(p_nk_multigraph(2, 4).order() == 9);
}

TEST_CASE("chained line families") {
    for (int n : {1, 2}) {
        const Graph g = chained_line_family(4, n);
        CHECK(regular_degree(g) == 3);
        CHECK(is_claw_free(g));
        CHECK(g.order() == 12 + 4 * n);
    }
    CHECK(chromatic_number(square(chained_line_family(4, 1))).value == 4);
    const Graph g6 = chained_line_family(6, 1);
    CHECK(regular_degree(g6) == 5);
    CHECK(is_claw_free(g6));
    CHECK(chromatic_number(square(g6)).value == 6);
    CHECK_THROWS_AS(chained_line_family(5, 1), ParameterError);
    // the construction really is a line graph of the spliced multigraph
    CHECK(line_graph(chained_base_multigraph(4, 2, 1, 3)) == chained_line_family(4, 2, 1, 3));
}

TEST_CASE("sharpness graphs") {
    const Graph g3 = sharpness_graph(3);
    CHECK(g3.order() == 10);
    CHECK(regular_degree(g3) == 4);
    CHECK(chromatic_number(g3).value == 3);
    CHECK(oracle::chromatic_number(g3) == 3);
    const Graph g4 = sharpness_graph(4);
    CHECK(g4.order() == 14);
    CHECK(regular_degree(g4) == 6);
    CHECK_THROWS_AS(sharpness_graph(2), ParameterError);
}

TEST_CASE("one-factorizations and Latin squares") {
    const auto f6 = one_factorization(6);
    CHECK(f6.size() == 5);
    for (const auto& m : f6)
        CHECK(m.size() == 3);
    CHECK(one_factorization(4).size() == 3);
    CHECK_THROWS_AS(one_factorization(5), ParameterError);
    for (int order = 2; order <= 12; order += 2) {
        CAPTURE(order);
        const LatinSquare L = latin_from_factorization(one_factorization(order));
        for (int i = 1; i <= order; ++i) {
            CHECK(L.at(i, i) == 0);
            std::set<int> row;
            for (int j = 1; j <= order; ++j) {
                CHECK(L.at(i, j) == L.at(j, i));
                row.insert(L.at(i, j));
            }
            CHECK(static_cast<int>(row.size()) == order); // Latin row
        }
        for (int c = 1; c < order; ++c) {
            std::vector<int> hits(static_cast<std::size_t>(order + 1), 0);
            for (int i = 1; i <= order; ++i)
                for (int j = i + 1; j <= order; ++j)
                    if (L.at(i, j) == c) {
                        ++hits[static_cast<std::size_t>(i)];
                        ++hits[static_cast<std::size_t>(j)];
                    }
            for (int i = 1; i <= order; ++i)
                CHECK(hits[static_cast<std::size_t>(i)] == 1); // perfect matching
        }
    }
}

TEST_CASE("L(S(K6)) matches the v_{i,j} description") {
    const Graph g = line_graph(subdivision(complete_graph(6)));
    std::set<int> seen;
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j)
            if (i != j) {
                const int v = lsk_vertex(g, i, j);
                REQUIRE(v >= 0);
                seen.insert(v);
            }
    CHECK(seen.size() == 30);
    // v_{i,j} ~ v_{i,k} (same branch vertex) and v_{i,j} ~ v_{j,i} (same edge), nothing else
    int expected = 0;
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j)
            for (int k = 1; k <= 6; ++k)
                for (int l = 1; l <= 6; ++l) {
                    if (i == j || k == l || (i == k && j == l))
                        continue;
                    const bool want = i == k || (i == l && j == k);
                    const bool have = g.adjacent(lsk_vertex(g, i, j), lsk_vertex(g, k, l));
                    CHECK(want == have);
                    expected += want ? 1 : 0;
                }
    CHECK(expected / 2 == g.size());
}

TEST_CASE("explicit colorings") {
    const Graph g8 = square(girth6_cubic(8));
    auto c = coloring_girth6_square(g8, 8);
    CHECK(validate_coloring(g8, c).ok());
    CHECK(c.distinct_colors() == 4);
    const Graph l6 = square(line_graph(subdivision(complete_graph(6))));
    auto c6 = coloring_lsk_square(l6, 6);
    CHECK(validate_coloring(l6, c6).ok());
    CHECK(c6.distinct_colors() == 6);
    const Graph p12 = square(planar_cubic(12));
    CHECK(validate_coloring(p12, coloring_planar_square(p12, 12)).ok());
    const Graph lp3 = square(line_graph(gen_petersen(15, 3)));
    CHECK(validate_coloring(lp3, coloring_lp3_square(lp3, 15)).ok());
    const Graph lp2 = square(line_graph(gen_petersen(10, 2)));
    CHECK(validate_coloring(lp2, coloring_lp2_square(lp2, 10)).ok());
    const Graph s4 = sharpness_graph(4);
    CHECK(validate_coloring(s4, coloring_sharpness(s4, 4)).ok());

    const Graph k2 = complete_graph(2);
    const auto bad = validate_coloring(k2, Coloring{{1, 1}});
    CHECK_FALSE(bad.ok());
    CHECK(bad.monochromatic_edges.size() == 1);
    CHECK_THROWS_AS(validate_coloring(k2, Coloring{{1}}), ParameterError);
}

TEST_CASE("list builders") {
    const Graph g8 = square(girth6_cubic(8));
    const auto l = lists_girth6(g8, 8);
    for (int i = 1; i <= 8; ++i) {
        CHECK(l.lists[static_cast<std::size_t>(g8.index_of(X(i)))] == std::vector<int>{2, 3, 4, 5});
        const auto& y = l.lists[static_cast<std::size_t>(g8.index_of(Y(i)))];
        CHECK(y == (i <= 4 ? std::vector<int>{1, 3, 4, 5} : std::vector<int>{1, 2, 4, 5}));
    }
    CHECK_THROWS_AS(lists_girth6(square(girth6_cubic(10)), 10), ParameterError);
    CHECK_THROWS_AS(lists_girth6(square(planar_cubic(12)), 8), ParameterError);

    const Graph p12 = square(planar_cubic(12));
    const Graph lsk4 = square(line_graph(subdivision(complete_graph(4))));
    const Graph lsk6 = line_graph(subdivision(complete_graph(6)));
    const Graph lp3 = square(line_graph(gen_petersen(15, 3)));
    const Graph lp2 = square(line_graph(gen_petersen(10, 2)));
    const Graph s3 = sharpness_graph(3);
    const Graph p103 = gen_petersen(10, 3);
    std::vector<int> strong{1, 2, 3, 4, 5, 3, 2, 5, 1, 2, 4, 1, 3, 4, 5, 3, 2, 5, 1, 4, 4, 5, 3, 2, 5, 1, 2, 1, 4, 3};

    struct Case {
        ListAssignment la;
        std::size_t size;
        std::size_t universe;
    };
    const std::vector<Case> cases{
        {lists_planar(p12, 12), 4, 5},
        {lists_lsk4(lsk4, {0, 1, 2, 3}), 4, 5},
        {lists_lsk6(lsk6, latin_from_factorization(one_factorization(6))), 6, 7},
        {lists_lp3(lp3, 15), 5, 6},
        {lists_lp2(lp2, 10), 5, 6},
        {lists_sharpness(s3, 3), 3, 4},
        {lists_observ(p103, strong), 3, 5},
    };
    for (const auto& c : cases) {
        CHECK(c.la.universe.size() == c.universe);
        for (const auto& list : c.la.lists) {
            CHECK(list.size() == c.size);
            for (int col : list)
                CHECK(std::find(c.la.universe.begin(), c.la.universe.end(), col) != c.la.universe.end());
        }
    }
    CHECK(cases[2].la.universe.front() == 0);

    const auto ls = lists_sharpness(s3, 3);
    CHECK(ls.universe == std::vector<int>{1, 2, 3, 4});
    for (int v = 0; v < s3.order(); ++v)
        if (s3.label(v).role == Role::x || s3.label(v).role == Role::y)
            CHECK(ls.lists[static_cast<std::size_t>(v)] == std::vector<int>{1, 2, 3});

    CHECK_THROWS_AS(lists_lp3(square(line_graph(gen_petersen(10, 3))), 10), ParameterError);
    CHECK_THROWS_AS(lists_lp2(lp2, 12), ParameterError);
    CHECK_THROWS_AS(lists_lsk6(lsk6, latin_from_factorization(one_factorization(4))), ParameterError);
    std::vector<int> improper(30, 1);
    CHECK_THROWS_AS(lists_observ(p103, improper), ParameterError);
}

TEST_CASE("family descriptors") {
    CHECK(build_family({"girth6-cubic", {8}}) == girth6_cubic(8));
    CHECK(build_family({"chained-line", {4, 2, 1, 2}}) == chained_line_family(4, 2, 1, 2));
    CHECK(build_family({"complete-multipartite", {2, 3}}) == complete_multipartite({2, 3}));
    CHECK_THROWS_AS(build_family({"girth6-cubic", {}}), ParameterError);
    CHECK_THROWS_AS(build_family({"nonsense", {1}}), ParameterError);
    CHECK(family_names().size() == 10);
}
