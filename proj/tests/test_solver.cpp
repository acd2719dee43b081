#include "oracles.hpp"

#include "sqlab/avoiding.hpp"
#include "sqlab/choosability.hpp"
#include "sqlab/errors.hpp"
#include "sqlab/families.hpp"
#include "sqlab/searches.hpp"
#include "sqlab/solver.hpp"
#include "sqlab/structure.hpp"
#include "sqlab/transforms.hpp"

#include <doctest.h>

using namespace sqlab;

namespace {

VertexLabel w(int i) { return VertexLabel::atom(Role::w, {i}); }

Graph two_squares_sharing_edge() {
    return build_graph({w(1), w(2), w(3), w(4), w(5), w(6)},
                       {{w(1), w(2)}, {w(2), w(3)}, {w(3), w(4)}, {w(4), w(1)}, {w(2), w(5)}, {w(5), w(6)}, {w(6), w(1)}});
}

ListAssignment lists_of(std::vector<std::vector<int>> l, std::vector<int> universe) {
    ListAssignment la;
    la.universe = std::move(universe);
    la.lists = std::move(l);
    return la;
}

ListAssignment forbid(std::vector<std::vector<int>> l, int k) {
    ListAssignment la;
    la.mode = ListMode::forbidden;
    for (int c = 1; c <= k; ++c)
        la.universe.push_back(c);
    la.lists = std::move(l);
    return la;
}

} // namespace

TEST_CASE("chromatic number") {
    CHECK(chromatic_number(square(girth6_cubic(8))).value == 4);
    CHECK(chromatic_number(square(line_graph(gen_petersen(10, 3)))).value == 5);
    CHECK(chromatic_number(cycle_graph(5)).value == 3);
    CHECK(chromatic_number(complete_graph(1)).value == 1);

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph r = oracle::random_graph(1 + static_cast<int>(rng() % 9), 0.45, rng);
        const auto res = chromatic_number(r);
        CHECK(res.value == oracle::chromatic_number(r));
        CHECK(validate_coloring(r, res.witness).ok());
        CHECK(res.witness.distinct_colors() == res.value);
        CHECK(res.lower_bound <= res.value);
    }
    // squares of every family are at least Delta+1 and clique-bounded
    for (const Graph& base : {girth6_cubic(8), planar_cubic(12), gen_petersen(10, 2), chained_line_family(4, 1)}) {
        const Graph sq = square(base);
        const int chi = chromatic_number(sq).value;
        CHECK(chi >= clique_number(sq));
        CHECK(chi >= base.max_degree() + 1);
    }
}

TEST_CASE("list coloring") {
    const Graph k3 = complete_graph(3);
    CHECK(list_colorable(k3, lists_of({{1, 2}, {1, 2}, {1, 2}}, {1, 2})).infeasible());
    CHECK(list_colorable(k3, lists_of({{1, 2}, {1, 3}, {2, 3}}, {1, 2, 3})).feasible());
    const auto empty = list_colorable(k3, lists_of({{1}, {}, {2}}, {1, 2}));
    CHECK(empty.infeasible());
    CHECK(empty.nodes == 0);
    CHECK_THROWS_AS(list_colorable(k3, forbid({{1}, {1}, {1}}, 3)), ParameterError);
    CHECK_THROWS_AS(list_colorable(k3, lists_of({{1}}, {1})), ParameterError);

    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const Graph r = oracle::random_graph(n, 0.5, rng);
        const ListAssignment la = oracle::random_lists(n, 5, 1, 4, rng);
        const Verdict v = list_colorable(r, la);
        CHECK(v.feasible() == oracle::list_colorable(r, la.lists));
        if (v.feasible()) {
            REQUIRE(v.witness);
            CHECK(validate_coloring(r, *v.witness, &la).ok());
        }
        // adding one color never loses feasibility
        ListAssignment more = la;
        auto& l = more.lists[rng() % static_cast<std::size_t>(n)];
        for (int c = 1; c <= 5; ++c)
            if (std::find(l.begin(), l.end(), c) == l.end()) {
                l.push_back(c);
                break;
            }
        more.normalize();
        if (v.feasible())
            CHECK(list_colorable(r, more).feasible());
    }
}

TEST_CASE("threads and determinism") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 6 + static_cast<int>(rng() % 6);
        const Graph r = oracle::random_graph(n, 0.5, rng);
        const ListAssignment la = oracle::random_lists(n, 5, 2, 4, rng);
        SolveOptions seq, par;
        seq.deterministic = par.deterministic = true;
        par.threads = 4;
        const Verdict a = list_colorable(r, la, seq);
        const Verdict b = list_colorable(r, la, par);
        CHECK(a.outcome == b.outcome);
        const auto least = oracle::first_list_coloring(r, la.lists);
        CHECK(a.feasible() == least.has_value());
        if (least) {
            CHECK(a.witness->color == *least);
            CHECK(b.witness->color == *least);
        }
    }
    // a hard instance splits into many subproblems
    const Graph lsk6 = square(line_graph(subdivision(complete_graph(6))));
    const auto latin = lists_lsk6(lsk6, latin_from_factorization(one_factorization(6)));
    SolveOptions four;
    four.threads = 4;
    CHECK(list_colorable(lsk6, latin, four).infeasible());
}

TEST_CASE("budgets give unknown, never infeasible") {
    const Graph lsk6 = square(line_graph(subdivision(complete_graph(6))));
    const auto latin = lists_lsk6(lsk6, latin_from_factorization(one_factorization(6)));
    SolveOptions tiny;
    tiny.node_budget = 1000;
    const Verdict v = list_colorable(lsk6, latin, tiny);
    CHECK(v.budget_hit());
    CHECK(outcome_name(v.outcome) == "unknown (budget)");
    SolveOptions quick;
    quick.time_budget_ms = 1;
    quick.node_budget = 0;
    CHECK_FALSE(list_colorable(lsk6, latin, quick).feasible());
}

TEST_CASE("forbidding and avoiding") {
    const Graph g8 = square(girth6_cubic(8));
    const auto bars = lists_girth6(g8, 8);
    std::vector<int> c0;
    for (const auto& l : bars.lists)
        for (int c = 1; c <= 5; ++c)
            if (std::find(l.begin(), l.end(), c) == l.end())
                c0.push_back(c);
    REQUIRE(c0.size() == static_cast<std::size_t>(g8.order()));
    CHECK(forbidding_infeasible(g8, 5, c0).infeasible());
    CHECK(forbidding_infeasible(g8, 4, std::vector<int>(16, 0)).feasible());
    CHECK(forbidding_infeasible(complete_graph(1), 1, {1}).infeasible());
    CHECK(forbidding_infeasible(complete_graph(2), 2, {1, 2}).feasible());

    const Graph k1 = complete_graph(1);
    const Verdict two = avoid_colorable(k1, 2, forbid({{1}}, 2));
    REQUIRE(two.feasible());
    CHECK(two.witness->of(0) == 2);
    CHECK(avoid_colorable(k1, 1, forbid({{1}}, 1)).infeasible());
    // colors beyond the palette never constrain
    CHECK(avoid_colorable(k1, 1, forbid({{7, 9}}, 1)).feasible());
}

TEST_CASE("bad permutations of L(S(K4))^2") {
    const auto bad = search_bad_permutation_lsk4();
    CHECK(bad.size() == 6);
    // independent count: the naive oracle over all 1296 assignments
    const Graph sq = square(line_graph(subdivision(complete_graph(4))));
    int oracle_bad = 0;
    Lsk4Permutation p{};
    for (p[0] = 0; p[0] < 6; ++p[0])
        for (p[1] = 0; p[1] < 6; ++p[1])
            for (p[2] = 0; p[2] < 6; ++p[2])
                for (p[3] = 0; p[3] < 6; ++p[3])
                    if (!oracle::list_colorable(sq, lists_lsk4(sq, p).lists))
                        ++oracle_bad;
    CHECK(oracle_bad == 6);
    for (const auto& q : bad)
        CHECK_FALSE(oracle::list_colorable(sq, lists_lsk4(sq, q).lists));
}

TEST_CASE("choosability") {
    CHECK(is_k_choosable(cycle_graph(4), 2, 4).choosable);
    CHECK(is_k_choosable(cycle_graph(4), 2, 4).bounded_verification);
    CHECK(is_k_choosable(complete_multipartite({2, 3}), 2, 4).choosable);

    for (const Graph& g : {two_squares_sharing_edge(), complete_multipartite({2, 4})}) {
        auto r = is_k_choosable(g, 2, 4);
        CHECK_FALSE(r.choosable);
        REQUIRE(r.bad_assignment);
        for (const auto& l : r.bad_assignment->lists)
            CHECK(l.size() == 2);
        CHECK(list_colorable(g, *r.bad_assignment).infeasible());
        CHECK_FALSE(oracle::list_colorable(g, r.bad_assignment->lists));
    }
    CHECK_FALSE(is_k_choosable(cycle_graph(3), 2, 5).choosable);
    CHECK(is_k_choosable(cycle_graph(5), 3, 7).choosable);
    // the sharpness graph is k-chromatic but not k-choosable
    CHECK_FALSE(is_k_choosable(sharpness_graph(3), 3, 4).choosable);
    CHECK_THROWS_AS(is_k_choosable(cycle_graph(4), 3, 2), ParameterError);
}

TEST_CASE("avoiding chromatic numbers") {
    const std::vector<Graph> small{complete_graph(3), cycle_graph(5), complete_multipartite({2, 2}), path_graph(4)};
    for (const Graph& g : small)
        CHECK(avoiding_chromatic(g, 0) == chromatic_number(g).value);
    CHECK(avoiding_chromatic(cycle_graph(5), 1) == 4);
    CHECK(avoiding_chromatic(complete_multipartite({2, 2}), 1) == 3);
    for (const Graph& g : {complete_graph(3), cycle_graph(5), complete_multipartite({2, 2, 2})}) {
        const auto b = check_avoiding_bounds(g, 1);
        CAPTURE(b.describe());
        CHECK(b.ok());
    }
    CHECK_THROWS_AS(avoiding_chromatic(cycle_graph(9), 1), PreconditionError);
}

TEST_CASE("multipartite adversaries") {
    const Adversary a = multipartite_adversary(2, 1, 2);
    CHECK(is_complete_multipartite(a.graph) == std::vector<int>{2, 2});
    CHECK(avoid_colorable(a.graph, 2, a.lists).infeasible());
    CHECK(avoiding_chromatic_for(a.graph, a.lists) >= 3);

    const Adversary b = multipartite_adversary(3, 1, 2);
    CHECK(avoid_colorable(b.graph, 2, b.lists).infeasible());
    CHECK(avoid_colorable(b.graph, 3, b.lists).infeasible());
    CHECK(avoid_colorable(b.graph, 4, b.lists).feasible());
    CHECK(avoiding_chromatic_for(b.graph, b.lists) == 4);
    // same sweep with the oracle on complement lists
    for (int k = 2; k <= 4; ++k) {
        std::vector<std::vector<int>> adm;
        for (const auto& l : b.lists.lists) {
            std::vector<int> keep;
            for (int c = 1; c <= k; ++c)
                if (std::find(l.begin(), l.end(), c) == l.end())
                    keep.push_back(c);
            adm.push_back(keep);
        }
        CHECK(oracle::list_colorable(b.graph, adm) == (k >= 4));
    }

    const Adversary full = multipartite_adversary(2, 2, 2);
    for (const auto& l : full.lists.lists)
        CHECK(l == std::vector<int>{1, 2});
    CHECK(avoid_colorable(full.graph, 2, full.lists).infeasible());

    CHECK_THROWS_AS(multipartite_adversary(complete_multipartite({2, 3}), 2, 1, 2), PreconditionError);
    CHECK_THROWS_AS(multipartite_adversary(cycle_graph(5), 2, 1, 2), PreconditionError);
}
