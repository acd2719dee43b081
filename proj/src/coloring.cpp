#include "sqlab/coloring.hpp"

#include "sqlab/errors.hpp"

#include <algorithm>
#include <set>

namespace sqlab {

namespace {

void sort_unique(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool contains(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

} // namespace

void ListAssignment::normalize() {
    sort_unique(universe);
    for (auto& l : lists) {
        sort_unique(l);
        if (mode == ListMode::admissible)
            for (int c : l)
                if (!contains(universe, c))
                    throw ParameterError("list color " + std::to_string(c) + " outside the universe");
    }
}

std::vector<int> ListAssignment::bar(int excluded) const {
    std::vector<int> out;
    for (int c : universe)
        if (c != excluded)
            out.push_back(c);
    return out;
}

ListAssignment uniform_lists(int n, std::vector<int> universe, std::vector<int> list) {
    ListAssignment la;
    la.universe = std::move(universe);
    la.lists.assign(static_cast<std::size_t>(n), std::move(list));
    la.normalize();
    return la;
}

int Coloring::distinct_colors() const {
    return static_cast<int>(std::set<int>(color.begin(), color.end()).size());
}

std::string ColoringViolations::describe(const Graph& g) const {
    std::string out;
    for (const Edge& e : monochromatic_edges)
        out += "monochromatic edge " + g.label(e.u).str() + " -- " + g.label(e.v).str() + "\n";
    for (int v : list_violations)
        out += "list violated at " + g.label(v).str() + "\n";
    return out;
}

ColoringViolations validate_coloring(const Graph& g, const Coloring& c, const ListAssignment* lists) {
    if (static_cast<int>(c.color.size()) != g.order())
        throw ParameterError("coloring does not cover every vertex");
    if (lists && static_cast<int>(lists->lists.size()) != g.order())
        throw ParameterError("list assignment does not cover every vertex");
    ColoringViolations out;
    for (const Edge& e : g.edges())
        if (c.of(e.u) == c.of(e.v) &&
            (out.monochromatic_edges.empty() || !(out.monochromatic_edges.back() == e)))
            out.monochromatic_edges.push_back(e);
    if (lists)
        for (int v = 0; v < g.order(); ++v) {
            bool in = contains(lists->lists[static_cast<std::size_t>(v)], c.of(v));
            if (in != (lists->mode == ListMode::admissible))
                out.list_violations.push_back(v);
        }
    return out;
}

ListAssignment palette_complement(const ListAssignment& forbidden, int k) {
    ListAssignment out;
    out.mode = ListMode::admissible;
    for (int c = 1; c <= k; ++c)
        out.universe.push_back(c);
    out.lists.reserve(forbidden.lists.size());
    for (const auto& l : forbidden.lists) {
        std::vector<int> allowed;
        for (int c = 1; c <= k; ++c)
            if (!contains(l, c))
                allowed.push_back(c);
        out.lists.push_back(std::move(allowed));
    }
    return out;
}

} // namespace sqlab
