#include "sqlab/avoiding.hpp"

#include "sqlab/choosability.hpp"
#include "sqlab/errors.hpp"
#include "sqlab/families.hpp"
#include "sqlab/solver.hpp"
#include "sqlab/structure.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace sqlab {

namespace {

std::vector<std::vector<int>> subsets(int n, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (int c = from; c <= n; ++c) {
            cur.push_back(c);
            rec(c + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

long long binomial(int n, int r) {
    if (r < 0 || r > n)
        return 0;
    long long b = 1;
    for (int i = 1; i <= r; ++i)
        b = b * (n - r + i) / i;
    return b;
}

// Whether every assignment of size-s subsets of {1..k} can be avoided with k
// colors. Vertex 0 is fixed to {1..s}, which is harmless since the palette
// is symmetric.
bool avoids_all(const Graph& g, int k, int s) {
    const int n = g.order();
    const auto choices = subsets(k, s);
    ListAssignment la;
    la.mode = ListMode::forbidden;
    for (int c = 1; c <= k; ++c)
        la.universe.push_back(c);
    la.lists.assign(static_cast<std::size_t>(n), {});
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == n)
            return avoid_colorable(g, k, la).feasible();
        if (v == 0) {
            la.lists[0] = choices.front();
            return rec(1);
        }
        for (const auto& c : choices) {
            la.lists[static_cast<std::size_t>(v)] = c;
            if (!rec(v + 1))
                return false;
        }
        return true;
    };
    return n == 0 || rec(0);
}

} // namespace

int avoiding_chromatic_for(const Graph& g, const ListAssignment& forbidden) {
    int k = std::max(1, chromatic_number(g).value);
    int top = 0;
    for (const auto& l : forbidden.lists)
        for (int c : l)
            top = std::max(top, c);
    // k = chi + top always works: colors top+1.. are never forbidden.
    for (;; ++k) {
        if (avoid_colorable(g, k, forbidden).feasible())
            return k;
        if (k > top + g.order() + 1)
            throw GraphError("avoiding search did not terminate");
    }
}

int avoiding_chromatic(const Graph& g, int m) {
    if (m < 0)
        throw ParameterError("avoiding_chromatic needs m >= 0");
    if (g.order() > kAvoidingMaxOrder)
        throw PreconditionError("avoiding_chromatic is limited to " + std::to_string(kAvoidingMaxOrder) +
                                " vertices, got " + std::to_string(g.order()));
    if (g.order() == 0)
        return 0;
    const int chi = chromatic_number(g).value;
    for (int k = chi + m;; ++k)
        if (avoids_all(g, k, std::min(m, k)))
            return k;
}

std::string AvoidingBounds::describe() const {
    std::ostringstream os;
    os << "m=" << m << " chi=" << chi << " chi_l=" << list_chi << (list_chi_bounded ? " (bounded)" : "")
       << " avoid[m-1]=" << prev << " avoid[m]=" << value << " chain=" << (chain_holds ? "ok" : "FAIL")
       << " sandwich=" << (sandwich_holds ? "ok" : "FAIL");
    return os.str();
}

AvoidingBounds check_avoiding_bounds(const Graph& g, int m) {
    if (m < 1)
        throw ParameterError("check_avoiding_bounds needs m >= 1");
    AvoidingBounds b;
    b.m = m;
    b.chi = chromatic_number(g).value;
    b.list_chi = list_chromatic_number_bounded(g, &b.list_chi_bounded);
    b.prev = avoiding_chromatic(g, m - 1);
    b.value = avoiding_chromatic(g, m);
    b.chain_holds = b.prev + 1 <= b.value && b.value <= b.prev + b.chi && b.prev + b.chi <= (m + 1) * b.chi;
    b.sandwich_holds = b.chi + m <= b.value && b.value <= b.list_chi + m;
    return b;
}

namespace {

ListAssignment adversary_lists(const std::vector<std::vector<int>>& part_members, int p, int m) {
    const auto subs = subsets(p, m);
    ListAssignment la;
    la.mode = ListMode::forbidden;
    for (int c = 1; c <= p; ++c)
        la.universe.push_back(c);
    std::size_t n = 0;
    for (const auto& part : part_members)
        n += part.size();
    la.lists.assign(n, {});
    for (const auto& part : part_members)
        for (std::size_t i = 0; i < part.size(); ++i)
            la.lists[static_cast<std::size_t>(part[i])] = subs[i];
    return la;
}

void check_adversary_params(int p, int m, int parts) {
    if (p < 1 || m < 0 || m > p || parts < 1)
        throw ParameterError("multipartite_adversary needs p >= 1, 0 <= m <= p, parts >= 1");
}

} // namespace

Adversary multipartite_adversary(int p, int m, int parts) {
    check_adversary_params(p, m, parts);
    const int size = static_cast<int>(binomial(p, m));
    Graph g = complete_multipartite(std::vector<int>(static_cast<std::size_t>(parts), size));
    ListAssignment la = multipartite_adversary(g, p, m, parts);
    return {std::move(g), std::move(la)};
}

ListAssignment multipartite_adversary(const Graph& g, int p, int m, int parts) {
    check_adversary_params(p, m, parts);
    const long long size = binomial(p, m);
    auto sizes = is_complete_multipartite(g);
    if (!sizes)
        throw PreconditionError("adversary graph is not complete multipartite");
    if (static_cast<int>(sizes->size()) != parts ||
        std::any_of(sizes->begin(), sizes->end(), [&](int s) { return s != size; }))
        throw PreconditionError("part sizes must all equal C(" + std::to_string(p) + "," + std::to_string(m) +
                                ") = " + std::to_string(size) + " across " + std::to_string(parts) + " parts");
    // parts of a complete multipartite graph are the classes of non-adjacency
    std::vector<int> part_of(static_cast<std::size_t>(g.order()), -1);
    std::vector<std::vector<int>> members;
    for (int v = 0; v < g.order(); ++v) {
        if (part_of[static_cast<std::size_t>(v)] >= 0)
            continue;
        std::vector<int> part;
        for (int w = v; w < g.order(); ++w)
            if (w == v || !g.adjacent(v, w)) {
                part_of[static_cast<std::size_t>(w)] = static_cast<int>(members.size());
                part.push_back(w);
            }
        members.push_back(std::move(part));
    }
    return adversary_lists(members, p, m);
}

} // namespace sqlab
