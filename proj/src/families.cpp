#include "sqlab/families.hpp"

#include "sqlab/errors.hpp"
#include "sqlab/structure.hpp"
#include "sqlab/transforms.hpp"

#include <algorithm>
#include <numeric>

namespace sqlab {

namespace {

// Z_n on {1..n}.
int ring(int i, int n) {
    return ((i - 1) % n + n) % n + 1;
}

VertexLabel lab(Role r, int i) {
    return VertexLabel::atom(r, {i});
}

void require(bool ok, const std::string& what) {
    if (!ok)
        throw ParameterError(what);
}

// x_1..x_n then y_1..y_n, with x_i adjacent to y_{i+o} for each offset o.
Graph xy_cubic(int n, std::initializer_list<int> offsets, std::vector<std::string> tags) {
    std::vector<VertexLabel> labels;
    for (int i = 1; i <= n; ++i)
        labels.push_back(lab(Role::x, i));
    for (int i = 1; i <= n; ++i)
        labels.push_back(lab(Role::y, i));
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int o : offsets)
            edges.emplace_back(i - 1, n + ring(i + o, n) - 1);
    return Graph::from_indices(std::move(labels), std::move(edges), std::move(tags));
}

int label_index(const Graph& g, const VertexLabel& l) {
    auto i = g.find(l);
    if (!i)
        throw ParameterError("graph has no vertex " + l.str() + " (family/label mismatch)");
    return *i;
}

ListAssignment bar_universe(const Graph& g, int lo, int hi) {
    ListAssignment la;
    for (int c = lo; c <= hi; ++c)
        la.universe.push_back(c);
    la.lists.assign(static_cast<std::size_t>(g.order()), {});
    return la;
}

void check_complete(const Graph& g, const ListAssignment& la) {
    for (int v = 0; v < g.order(); ++v)
        if (la.lists[static_cast<std::size_t>(v)].empty())
            throw ParameterError("no list assigned to " + g.label(v).str() + " (family/label mismatch)");
}

} // namespace

Graph girth6_cubic(int n) {
    require(n >= 8, "girth6_cubic requires n >= 8");
    std::vector<std::string> tags;
    if (n % 4 != 0)
        tags.emplace_back(kTagClaimsNotApplicable);
    return xy_cubic(n, {-2, 0, 1}, std::move(tags));
}

Graph planar_cubic(int n) {
    require(n >= 12, "planar_cubic requires n >= 12");
    std::vector<std::string> tags{kTagPlanarUnverified};
    if (n % 4 != 0)
        tags.emplace_back(kTagClaimsNotApplicable);
    return xy_cubic(n, {-1, 0, 1}, std::move(tags));
}

Graph gen_petersen(int n, int k) {
    require(k >= 1 && 2 * k < n, "gen_petersen requires 1 <= k < n/2");
    std::vector<VertexLabel> labels;
    for (int i = 1; i <= n; ++i)
        labels.push_back(lab(Role::v, i));
    for (int i = 1; i <= n; ++i)
        labels.push_back(lab(Role::u, i));
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(i - 1, ring(i + 1, n) - 1);
        edges.emplace_back(i - 1, n + i - 1);
        edges.emplace_back(n + i - 1, n + ring(i + k, n) - 1);
    }
    std::vector<std::string> tags;
    if (k == 2 && n % 10 == 0)
        tags.emplace_back(kTagPlanarUnverified);
    return Graph::from_indices(std::move(labels), std::move(edges), std::move(tags));
}

Graph complete_graph(int n) {
    require(n >= 1, "complete_graph requires n >= 1");
    std::vector<VertexLabel> labels;
    for (int i = 1; i <= n; ++i)
        labels.push_back(lab(Role::w, i));
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            edges.emplace_back(a, b);
    std::vector<std::string> tags;
    if (n <= 4)
        tags.emplace_back(kTagPlanarUnverified);
    return Graph::from_indices(std::move(labels), std::move(edges), std::move(tags));
}

Graph complete_multipartite(const std::vector<int>& sizes) {
    require(!sizes.empty(), "complete_multipartite requires at least one part");
    std::vector<VertexLabel> labels;
    std::vector<int> part_of;
    for (std::size_t p = 0; p < sizes.size(); ++p) {
        require(sizes[p] >= 1, "part sizes must be positive");
        for (int i = 1; i <= sizes[p]; ++i) {
            labels.push_back(VertexLabel::atom(Role::part, {static_cast<int>(p) + 1, i}));
            part_of.push_back(static_cast<int>(p));
        }
    }
    std::vector<std::pair<int, int>> edges;
    const int n = static_cast<int>(labels.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (part_of[static_cast<std::size_t>(a)] != part_of[static_cast<std::size_t>(b)])
                edges.emplace_back(a, b);
    return Graph::from_indices(std::move(labels), std::move(edges));
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle_graph requires n >= 3");
    std::vector<VertexLabel> labels;
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) {
        labels.push_back(lab(Role::w, i));
        edges.emplace_back(i - 1, i % n);
    }
    return Graph::from_indices(std::move(labels), std::move(edges));
}

Graph path_graph(int n) {
    require(n >= 1, "path_graph requires n >= 1");
    std::vector<VertexLabel> labels;
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) {
        labels.push_back(lab(Role::w, i));
        if (i < n)
            edges.emplace_back(i - 1, i);
    }
    return Graph::from_indices(std::move(labels), std::move(edges));
}

namespace {

// Appends c[0..3n] between two existing vertex indices `left`, `right`.
void splice_chain(std::vector<VertexLabel>& labels, std::vector<std::pair<int, int>>& edges, int left, int right,
                  int n, int k) {
    const int first = static_cast<int>(labels.size());
    for (int i = 0; i <= 3 * n; ++i)
        labels.push_back(lab(Role::chain, i));
    edges.emplace_back(left, first);
    for (int i = 0; i < 3 * n; ++i) {
        const int copies = (i % 3 == 1) ? k : 1;
        for (int c = 0; c < copies; ++c)
            edges.emplace_back(first + i, first + i + 1);
    }
    edges.emplace_back(first + 3 * n, right);
}

} // namespace

Graph p_nk_multigraph(int n, int k) {
    require(n >= 1 && k >= 1, "p_nk_multigraph requires n >= 1 and k >= 1");
    std::vector<VertexLabel> labels{VertexLabel::atom(Role::x), VertexLabel::atom(Role::y)};
    std::vector<std::pair<int, int>> edges;
    splice_chain(labels, edges, 0, 1, n, k);
    // x, c[0..3n], y in path order
    std::vector<VertexLabel> ordered;
    ordered.push_back(labels[0]);
    for (std::size_t i = 2; i < labels.size(); ++i)
        ordered.push_back(labels[i]);
    ordered.push_back(labels[1]);
    const int last = static_cast<int>(ordered.size()) - 1;
    auto remap = [&](int old) { return old == 0 ? 0 : (old == 1 ? last : old - 1); };
    for (auto& [a, b] : edges) {
        a = remap(a);
        b = remap(b);
    }
    return Graph::from_indices(std::move(ordered), std::move(edges));
}

Graph chained_base_multigraph(int t, int n, int a, int b) {
    require(t == 4 || t == 6, "chained_line_family supports t = 4 or t = 6");
    require(n >= 1, "chained_line_family requires n >= 1");
    require(1 <= a && a < b && b <= t, "chained_line_family requires 1 <= a < b <= t");
    const Graph sk = subdivision(complete_graph(t));
    const VertexLabel removed = VertexLabel::composite(Role::subdivision, lab(Role::w, a), lab(Role::w, b));
    const int removed_index = sk.index_of(removed);

    std::vector<VertexLabel> labels;
    std::vector<int> remap(static_cast<std::size_t>(sk.order()), -1);
    for (int v = 0; v < sk.order(); ++v)
        if (v != removed_index) {
            remap[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
            labels.push_back(sk.label(v));
        }
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : sk.edges())
        if (e.u != removed_index && e.v != removed_index)
            edges.emplace_back(remap[static_cast<std::size_t>(e.u)], remap[static_cast<std::size_t>(e.v)]);
    splice_chain(labels, edges, remap[static_cast<std::size_t>(sk.index_of(lab(Role::w, a)))],
                 remap[static_cast<std::size_t>(sk.index_of(lab(Role::w, b)))], n, t - 2);
    std::vector<std::string> tags;
    if (t == 4)
        tags.emplace_back(kTagPlanarUnverified);
    return Graph::from_indices(std::move(labels), std::move(edges), std::move(tags));
}

Graph chained_line_family(int t, int n, int a, int b) {
    return line_graph(chained_base_multigraph(t, n, a, b));
}

Graph sharpness_graph(int k) {
    require(k >= 3, "sharpness_graph requires k >= 3");
    std::vector<VertexLabel> labels;
    std::vector<int> X, Xp, Yp, Y;
    auto add = [&](Role r, int i, std::vector<int>& into) {
        into.push_back(static_cast<int>(labels.size()));
        labels.push_back(lab(r, i));
    };
    for (int i = 1; i < k; ++i)
        add(Role::x, i, X);
    for (int i = 1; i <= k; ++i)
        add(Role::x_prime, i, Xp);
    for (int i = 1; i <= k; ++i)
        add(Role::y_prime, i, Yp);
    for (int i = 1; i < k; ++i)
        add(Role::y, i, Y);
    std::vector<std::pair<int, int>> edges;
    auto clique = [&](const std::vector<int>& s) {
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                edges.emplace_back(s[i], s[j]);
    };
    auto join = [&](const std::vector<int>& s, const std::vector<int>& t) {
        for (int a : s)
            for (int b : t)
                edges.emplace_back(a, b);
    };
    clique(X);
    clique(Y);
    join(X, Xp);
    join(Yp, Y);
    for (std::size_t i = 0; i < Xp.size(); ++i)
        for (std::size_t j = 0; j < Yp.size(); ++j)
            if (i != j)
                edges.emplace_back(Xp[i], Yp[j]);
    return Graph::from_indices(std::move(labels), std::move(edges));
}

Graph build_family(const FamilyDescriptor& f) {
    auto need = [&](std::size_t count) {
        if (f.params.size() != count)
            throw ParameterError("family " + f.name + " expects " + std::to_string(count) + " parameter(s)");
    };
    const auto& p = f.params;
    if (f.name == "girth6-cubic") {
        need(1);
        return girth6_cubic(p[0]);
    }
    if (f.name == "planar-cubic") {
        need(1);
        return planar_cubic(p[0]);
    }
    if (f.name == "gen-petersen") {
        need(2);
        return gen_petersen(p[0], p[1]);
    }
    if (f.name == "complete") {
        need(1);
        return complete_graph(p[0]);
    }
    if (f.name == "complete-multipartite")
        return complete_multipartite(p);
    if (f.name == "cycle") {
        need(1);
        return cycle_graph(p[0]);
    }
    if (f.name == "path") {
        need(1);
        return path_graph(p[0]);
    }
    if (f.name == "p-nk") {
        need(2);
        return p_nk_multigraph(p[0], p[1]);
    }
    if (f.name == "chained-line") {
        need(4);
        return chained_line_family(p[0], p[1], p[2], p[3]);
    }
    if (f.name == "sharpness") {
        need(1);
        return sharpness_graph(p[0]);
    }
    throw ParameterError("unknown family '" + f.name + "'");
}

std::vector<std::string> family_names() {
    return {"girth6-cubic", "planar-cubic", "gen-petersen", "complete", "complete-multipartite",
            "cycle", "path", "p-nk", "chained-line", "sharpness"};
}

// ---- Latin squares ---------------------------------------------------------

std::vector<Matching> one_factorization(int order) {
    require(order >= 2 && order % 2 == 0, "one_factorization requires an even order >= 2");
    const int m = order - 1;
    std::vector<Matching> rounds;
    for (int r = 0; r < m; ++r) {
        Matching match;
        match.emplace_back(r + 1, order);
        for (int i = 1; i < order / 2; ++i) {
            int a = (r + i) % m + 1;
            int b = ((r - i) % m + m) % m + 1;
            match.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(match.begin(), match.end());
        rounds.push_back(std::move(match));
    }
    return rounds;
}

LatinSquare latin_from_factorization(const std::vector<Matching>& factorization) {
    LatinSquare sq;
    sq.order = static_cast<int>(factorization.size()) + 1;
    sq.cells.assign(static_cast<std::size_t>(sq.order), std::vector<int>(static_cast<std::size_t>(sq.order), 0));
    for (std::size_t r = 0; r < factorization.size(); ++r)
        for (auto [a, b] : factorization[r]) {
            require(a >= 1 && b <= sq.order && a != b, "matching edge out of range");
            auto& ab = sq.cells[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
            auto& ba = sq.cells[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)];
            require(ab == 0, "edge covered by two matchings");
            ab = ba = static_cast<int>(r) + 1;
        }
    return sq;
}

// ---- Roles -----------------------------------------------------------------

PetersenLineRoles petersen_line_roles(const Graph& g, int n, int k) {
    PetersenLineRoles roles;
    roles.x.assign(static_cast<std::size_t>(n) + 1, -1);
    roles.y.assign(static_cast<std::size_t>(n) + 1, -1);
    roles.z.assign(static_cast<std::size_t>(n) + 1, -1);
    for (int i = 1; i <= n; ++i) {
        roles.x[static_cast<std::size_t>(i)] = line_vertex(g, lab(Role::v, i), lab(Role::v, ring(i + 1, n)));
        roles.y[static_cast<std::size_t>(i)] = line_vertex(g, lab(Role::v, i), lab(Role::u, i));
        roles.z[static_cast<std::size_t>(i)] = line_vertex(g, lab(Role::u, i), lab(Role::u, ring(i + k, n)));
        if (roles.x[static_cast<std::size_t>(i)] < 0 || roles.y[static_cast<std::size_t>(i)] < 0 ||
            roles.z[static_cast<std::size_t>(i)] < 0)
            throw ParameterError("graph is not the line graph of P(" + std::to_string(n) + "," + std::to_string(k) +
                                 ") (family/label mismatch)");
    }
    return roles;
}

int lsk_vertex(const Graph& g, int i, int j) {
    if (i == j)
        return -1;
    VertexLabel sub = VertexLabel::composite(Role::subdivision, lab(Role::w, std::min(i, j)), lab(Role::w, std::max(i, j)));
    return line_vertex(g, lab(Role::w, i), sub);
}

// ---- Colorings -------------------------------------------------------------

Coloring coloring_girth6_square(const Graph& g, int n) {
    Coloring c{std::vector<int>(static_cast<std::size_t>(g.order()), 0)};
    for (int i = 1; i <= n; ++i) {
        const int r = ring(i, 4);
        c.color[static_cast<std::size_t>(label_index(g, lab(Role::x, i)))] = r;
        c.color[static_cast<std::size_t>(label_index(g, lab(Role::y, ring(i - 1, n))))] = r;
    }
    return c;
}

Coloring coloring_planar_square(const Graph& g, int n) {
    Coloring c{std::vector<int>(static_cast<std::size_t>(g.order()), 0)};
    for (int i = 1; i <= n; ++i) {
        const int r = ring(i, 4);
        c.color[static_cast<std::size_t>(label_index(g, lab(Role::x, i)))] = r;
        c.color[static_cast<std::size_t>(label_index(g, lab(Role::y, ring(i - 2, n))))] = r;
    }
    return c;
}

Coloring coloring_lsk_square(const Graph& g, int t) {
    Coloring c{std::vector<int>(static_cast<std::size_t>(g.order()), 0)};
    for (int i = 1; i <= t; ++i)
        for (int j = 1; j <= t; ++j)
            if (i != j) {
                int v = lsk_vertex(g, i, j);
                if (v < 0)
                    throw ParameterError("graph is not L(S(K_t)) (family/label mismatch)");
                c.color[static_cast<std::size_t>(v)] = j;
            }
    return c;
}

namespace {

Coloring petersen_triples(const Graph& g, int n, int k, int y_shift, int z_shift) {
    const auto roles = petersen_line_roles(g, n, k);
    Coloring c{std::vector<int>(static_cast<std::size_t>(g.order()), 0)};
    for (int i = 1; i <= n; ++i) {
        const int r = ring(i, 5);
        c.color[static_cast<std::size_t>(roles.x[static_cast<std::size_t>(i)])] = r;
        c.color[static_cast<std::size_t>(roles.y[static_cast<std::size_t>(ring(i + y_shift, n))])] = r;
        c.color[static_cast<std::size_t>(roles.z[static_cast<std::size_t>(ring(i + z_shift, n))])] = r;
    }
    return c;
}

} // namespace

Coloring coloring_lp3_square(const Graph& g, int n) {
    return petersen_triples(g, n, 3, 3, 4);
}

Coloring coloring_lp2_square(const Graph& g, int n) {
    return petersen_triples(g, n, 2, 3, 2);
}

Coloring coloring_sharpness(const Graph& g, int k) {
    Coloring c{std::vector<int>(static_cast<std::size_t>(g.order()), 0)};
    for (int i = 1; i < k; ++i) {
        c.color[static_cast<std::size_t>(label_index(g, lab(Role::x, i)))] = i;
        c.color[static_cast<std::size_t>(label_index(g, lab(Role::y, i)))] = i + 1;
    }
    for (int i = 1; i <= k; ++i) {
        c.color[static_cast<std::size_t>(label_index(g, lab(Role::x_prime, i)))] = k;
        c.color[static_cast<std::size_t>(label_index(g, lab(Role::y_prime, i)))] = 1;
    }
    return c;
}

// ---- Lists -----------------------------------------------------------------

ListAssignment lists_girth6(const Graph& g, int n) {
    require(n >= 8 && n % 4 == 0, "girth6 lists require n >= 8 and 4 | n");
    ListAssignment la = bar_universe(g, 1, 5);
    for (int i = 1; i <= n; ++i) {
        la.lists[static_cast<std::size_t>(label_index(g, lab(Role::x, i)))] = la.bar(1);
        la.lists[static_cast<std::size_t>(label_index(g, lab(Role::y, i)))] = la.bar(i <= n - 4 ? 2 : 3);
    }
    check_complete(g, la);
    return la;
}

ListAssignment lists_planar(const Graph& g, int n) {
    require(n >= 12 && n % 4 == 0, "planar lists require n >= 12 and 4 | n");
    ListAssignment la = bar_universe(g, 1, 5);
    auto put = [&](Role r, int i, int bar) {
        la.lists[static_cast<std::size_t>(label_index(g, lab(r, i)))] = la.bar(bar);
    };
    for (int i = 8; i <= n; ++i) {
        put(Role::x, i, 4);
        put(Role::y, i, 4);
    }
    for (int i : {3, 4, 5}) {
        put(Role::x, i, 3);
        put(Role::y, i, 3);
    }
    put(Role::x, 1, 2);
    put(Role::x, 2, 2);
    put(Role::y, 6, 2);
    put(Role::x, 7, 2);
    put(Role::y, 1, 1);
    put(Role::y, 2, 1);
    put(Role::x, 6, 1);
    put(Role::y, 7, 1);
    check_complete(g, la);
    return la;
}

std::vector<std::vector<int>> lsk4_independent_sets(const Graph& sq) {
    auto sets = maximum_independent_sets(sq, 3);
    if (sets.size() != 4 || sq.order() != 12)
        throw ParameterError("expected exactly four independent 3-sets in L(S(K4))^2");
    std::vector<int> seen(12, 0);
    for (const auto& s : sets)
        for (int v : s)
            ++seen[static_cast<std::size_t>(v)];
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
        throw ParameterError("independent 3-sets of L(S(K4))^2 do not partition the vertices");
    return sets;
}

ListAssignment lists_lsk4(const Graph& sq, const Lsk4Permutation& perm) {
    const auto sets = lsk4_independent_sets(sq);
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{1, 2, 3};
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    ListAssignment la = bar_universe(sq, 1, 5);
    for (std::size_t s = 0; s < 4; ++s) {
        require(perm[s] >= 0 && perm[s] < 6, "permutation index must be in 0..5");
        for (std::size_t r = 0; r < 3; ++r)
            la.lists[static_cast<std::size_t>(sets[s][r])] = la.bar(perms[static_cast<std::size_t>(perm[s])][r]);
    }
    return la;
}

ListAssignment lists_lsk6(const Graph& g, const LatinSquare& latin) {
    require(latin.order == 6, "lists_lsk6 needs a Latin square of order 6");
    ListAssignment la = bar_universe(g, 0, 6);
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j)
            if (i != j) {
                int v = lsk_vertex(g, i, j);
                if (v < 0)
                    throw ParameterError("graph is not L(S(K6)) (family/label mismatch)");
                la.lists[static_cast<std::size_t>(v)] = la.bar(latin.at(i, j));
            }
    check_complete(g, la);
    return la;
}

ListAssignment lists_lp3(const Graph& g, int n) {
    require(n >= 15 && n % 5 == 0, "lp3 lists require n >= 15 and 5 | n");
    const auto roles = petersen_line_roles(g, n, 3);
    ListAssignment la = bar_universe(g, 1, 6);
    for (auto& l : la.lists)
        l = la.bar(3);
    for (int i = n - 8; i <= n; ++i) {
        la.lists[static_cast<std::size_t>(roles.x[static_cast<std::size_t>(i)])] = la.bar(1);
        la.lists[static_cast<std::size_t>(roles.y[static_cast<std::size_t>(i)])] = la.bar(2);
    }
    return la;
}

ListAssignment lists_lp2(const Graph& g, int n) {
    require(n % 5 == 0 && n >= 5, "lp2 lists require 5 | n");
    const auto roles = petersen_line_roles(g, n, 2);
    ListAssignment la = bar_universe(g, 1, 6);
    for (int i = 1; i <= n; ++i) {
        la.lists[static_cast<std::size_t>(roles.x[static_cast<std::size_t>(i)])] = la.bar(1);
        la.lists[static_cast<std::size_t>(roles.y[static_cast<std::size_t>(i)])] = la.bar(2);
        la.lists[static_cast<std::size_t>(roles.z[static_cast<std::size_t>(i)])] = la.bar(3);
    }
    check_complete(g, la);
    return la;
}

ListAssignment lists_sharpness(const Graph& g, int k) {
    require(k >= 3, "sharpness lists require k >= 3");
    ListAssignment la = bar_universe(g, 1, k + 1);
    for (int i = 1; i <= k; ++i) {
        const int idx = ring(i + k - 1, k);
        la.lists[static_cast<std::size_t>(label_index(g, lab(Role::x_prime, idx)))] = la.bar(i);
        la.lists[static_cast<std::size_t>(label_index(g, lab(Role::y_prime, idx)))] = la.bar(i);
    }
    for (int i = 1; i < k; ++i) {
        la.lists[static_cast<std::size_t>(label_index(g, lab(Role::x, i)))] = la.bar(k + 1);
        la.lists[static_cast<std::size_t>(label_index(g, lab(Role::y, i)))] = la.bar(k + 1);
    }
    check_complete(g, la);
    return la;
}

ListAssignment lists_observ(const Graph& g, const std::vector<int>& edge_colors) {
    require(static_cast<int>(edge_colors.size()) == g.size(), "one color per edge required");
    ListAssignment la = bar_universe(g, 1, 5);
    for (std::size_t e = 0; e < edge_colors.size(); ++e) {
        const int c = edge_colors[e];
        require(c >= 1 && c <= 5, "edge colors must lie in 1..5");
        la.lists[static_cast<std::size_t>(g.edges()[e].u)].push_back(c);
        la.lists[static_cast<std::size_t>(g.edges()[e].v)].push_back(c);
    }
    la.normalize();
    for (int v = 0; v < g.order(); ++v)
        require(static_cast<int>(la.lists[static_cast<std::size_t>(v)].size()) == g.degree(v),
                "edge coloring is not proper at " + g.label(v).str());
    return la;
}

ListAssignment lists_chained(const Graph& lsk, const ListAssignment& base, const Graph& chained, int a, int b) {
    const int va = lsk_vertex(lsk, a, b);
    const int vb = lsk_vertex(lsk, b, a);
    require(va >= 0 && vb >= 0, "base graph is not L(S(K_t)) (family/label mismatch)");
    const auto& shared = base.lists[static_cast<std::size_t>(va)];
    require(shared == base.lists[static_cast<std::size_t>(vb)], "v_{a,b} and v_{b,a} must share a list");

    ListAssignment la;
    la.universe = base.universe;
    la.mode = base.mode;
    la.lists.assign(static_cast<std::size_t>(chained.order()), shared);
    for (int v = 0; v < chained.order(); ++v)
        if (auto old = lsk.find(chained.label(v)))
            la.lists[static_cast<std::size_t>(v)] = base.lists[static_cast<std::size_t>(*old)];
    return la;
}

} // namespace sqlab
