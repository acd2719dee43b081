#pragma once

#include "sqlab/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sqlab {

enum class ListMode { admissible, forbidden };

/// Per-vertex color sets over a declared universe.
///
/// In admissible mode L(v) lists the colors v may take; in forbidden mode it
/// lists colors v must avoid (colors outside the palette never matter).
/// Lists are indexed by vertex index of the graph they were built for and
/// kept sorted and duplicate-free.
struct ListAssignment {
    std::vector<int> universe;
    ListMode mode = ListMode::admissible;
    std::vector<std::vector<int>> lists;

    /// Sorts and deduplicates universe and lists; in admissible mode throws
    /// ParameterError when a list leaves the universe.
    void normalize();

    [[nodiscard]] std::size_t vertex_count() const { return lists.size(); }

    /// universe \ {excluded}
    [[nodiscard]] std::vector<int> bar(int excluded) const;

    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;
};

/// Uniform assignment: every one of `n` vertices gets `list`.
ListAssignment uniform_lists(int n, std::vector<int> universe, std::vector<int> list);

/// Color per vertex index.
struct Coloring {
    std::vector<int> color;

    [[nodiscard]] int of(int v) const { return color.at(static_cast<std::size_t>(v)); }
    [[nodiscard]] int distinct_colors() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct ColoringViolations {
    std::vector<Edge> monochromatic_edges;
    std::vector<int> list_violations; ///< vertices whose color breaks the list
    [[nodiscard]] bool ok() const { return monochromatic_edges.empty() && list_violations.empty(); }
    [[nodiscard]] std::string describe(const Graph& g) const;
};

/// Checks properness and, when given, list compliance (c(v) in L(v) for
/// admissible lists, c(v) not in L(v) for forbidden lists). Throws
/// ParameterError when the coloring or the lists do not cover every vertex.
ColoringViolations validate_coloring(const Graph& g, const Coloring& c,
                                     const ListAssignment* lists = nullptr);

/// Lists a forbidden-mode assignment as admissible lists over {1..k}.
ListAssignment palette_complement(const ListAssignment& forbidden, int k);

} // namespace sqlab
