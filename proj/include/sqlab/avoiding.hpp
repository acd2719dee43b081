#pragma once

#include "sqlab/coloring.hpp"
#include "sqlab/graph.hpp"

#include <string>

namespace sqlab {

/// Largest order accepted by avoiding_chromatic.
inline constexpr int kAvoidingMaxOrder = 8;

/// Smallest k such that g has an L-avoiding k-coloring for the given
/// forbidden-mode L.
int avoiding_chromatic_for(const Graph& g, const ListAssignment& forbidden);

/// chi-bar_m: smallest k that avoids every forbidden assignment with lists of
/// size at most m. Throws PreconditionError above kAvoidingMaxOrder vertices.
///
/// Only subsets of {1..k} of size min(m, k) need checking: a forbidden color
/// outside the palette never constrains, and enlarging a forbidden list
/// only makes avoiding harder. The search starts at chi(g) + m, which is a
/// lower bound.
int avoiding_chromatic(const Graph& g, int m);

struct AvoidingBounds {
    int m = 0;
    int chi = 0;
    int list_chi = 0;
    bool list_chi_bounded = false; ///< list_chi only verified over a capped universe
    int prev = 0;                  ///< chi-bar_{m-1}
    int value = 0;                 ///< chi-bar_m
    bool chain_holds = false;      ///< prev+1 <= value <= prev+chi <= (m+1)chi
    bool sandwich_holds = false;   ///< chi+m <= value <= list_chi+m
    [[nodiscard]] bool ok() const { return chain_holds && sandwich_holds; }
    [[nodiscard]] std::string describe() const;
};

AvoidingBounds check_avoiding_bounds(const Graph& g, int m);

struct Adversary {
    Graph graph;
    ListAssignment lists; ///< forbidden mode
};

/// Complete multipartite graph with `parts` parts of size C(p, m), each part
/// receiving every m-subset of {1..p} once as its forbidden lists.
Adversary multipartite_adversary(int p, int m, int parts);

/// Same lists laid over an existing graph, which must be complete
/// multipartite with `parts` parts of size C(p, m).
ListAssignment multipartite_adversary(const Graph& g, int p, int m, int parts);

} // namespace sqlab
