#pragma once

#include "sqlab/coloring.hpp"
#include "sqlab/graph.hpp"

#include <array>
#include <string>
#include <vector>

namespace sqlab {

inline constexpr const char* kTagPlanarUnverified = "planar-unverified";
inline constexpr const char* kTagClaimsNotApplicable = "claims-not-applicable";

/// Named family plus its integer parameters, enough to rebuild the graph.
///
/// | name                   | params          |
/// |------------------------|-----------------|
/// | girth6-cubic           | n               |
/// | planar-cubic           | n               |
/// | gen-petersen           | n, k            |
/// | complete               | n               |
/// | complete-multipartite  | part sizes...   |
/// | cycle                  | n               |
/// | path                   | n               |
/// | p-nk                   | n, k            |
/// | chained-line           | t, n, a, b      |
/// | sharpness              | k               |
struct FamilyDescriptor {
    std::string name;
    std::vector<int> params;

    friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

Graph build_family(const FamilyDescriptor& family);
std::vector<std::string> family_names();

/// Cubic bipartite graph on x_i, y_i (i in Z_n) with edges x_i y_{i-2},
/// x_i y_i, x_i y_{i+1}; girth 6. n >= 8.
Graph girth6_cubic(int n);

/// Cubic bipartite graph with edges x_i y_{i-1}, x_i y_i, x_i y_{i+1}. n >= 12.
Graph planar_cubic(int n);

/// P(n,k): outer cycle v_i, spokes v_i u_i, inner steps u_i u_{i+k}. 1 <= k < n/2.
Graph gen_petersen(int n, int k);

/// K_n on w[1..n].
Graph complete_graph(int n);
/// Parts labeled p[part, position], both 1-based.
Graph complete_multipartite(const std::vector<int>& sizes);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// Multigraph x, c[0..3n], y: a path in which c_i c_{i+1} is doubled to k
/// parallel edges whenever i = 1 (mod 3). Order 3n+3.
Graph p_nk_multigraph(int n, int k);

/// Line graph of S(K_t) with the path w_a - sub(w_a,w_b) - w_b replaced by
/// P_{n,t-2}. This is the chain of n copies of K_t minus an edge spliced
/// into L(S(K_t)). t in {4, 6}; 1 <= a < b <= t.
Graph chained_line_family(int t, int n, int a = 1, int b = 2);

/// The multigraph whose line graph is chained_line_family(t, n, a, b).
Graph chained_base_multigraph(int t, int n, int a = 1, int b = 2);

/// Vertex set X u X' u Y' u Y with |X| = |Y| = k-1, |X'| = |Y'| = k:
/// cliques on X and Y, complete joins X-X' and Y'-Y, and X'-Y' complete
/// bipartite minus the matching x'_i y'_i. (2k-2)-regular. k >= 3.
Graph sharpness_graph(int k);

// ---- Latin squares ---------------------------------------------------------

/// Perfect matchings of K_order on vertices 1..order (pairs (i,j), i < j).
using Matching = std::vector<std::pair<int, int>>;

/// Round-robin (circle method) 1-factorization: order-1 matchings.
std::vector<Matching> one_factorization(int order);

struct LatinSquare {
    int order = 0;
    std::vector<std::vector<int>> cells; ///< 0-based storage of L(i,j), i,j in 1..order

    [[nodiscard]] int at(int i, int j) const {
        return cells.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(j - 1));
    }
};

/// L(i,j) = index (1-based) of the matching containing ij; L(i,i) = 0.
LatinSquare latin_from_factorization(const std::vector<Matching>& factorization);

// ---- Vertex roles inside the constructed families --------------------------

/// x_i, y_i, z_i of L(P(n,k)): the line vertices of v_i v_{i+1}, v_i u_i and
/// u_i u_{i+k}. Vectors are 1-based (entry 0 unused).
struct PetersenLineRoles {
    std::vector<int> x, y, z;
};
PetersenLineRoles petersen_line_roles(const Graph& line_of_petersen, int n, int k);

/// v_{i,j} of L(S(K_t)): line vertex of the edge between w_i and
/// sub(w_i,w_j). Returns -1 for i == j or a missing vertex.
int lsk_vertex(const Graph& g, int i, int j);

// ---- Explicit colorings ----------------------------------------------------

/// x_i and y_{i-1} share color i mod 4. Colors 1..4.
Coloring coloring_girth6_square(const Graph& g, int n);
/// x_i and y_{i-2} share color i mod 4.
Coloring coloring_planar_square(const Graph& g, int n);
/// v_{i,j} gets color j.
Coloring coloring_lsk_square(const Graph& g, int t);
/// x_i, y_{i+3}, z_{i+4} share color i mod 5 (L(P(n,3))^2).
Coloring coloring_lp3_square(const Graph& g, int n);
/// x_i, y_{i+3}, z_{i+2} share color i mod 5 (L(P(n,2))^2).
Coloring coloring_lp2_square(const Graph& g, int n);
/// x_i -> i, y_i -> i+1, X' -> k, Y' -> 1.
Coloring coloring_sharpness(const Graph& g, int k);

// ---- List builders ---------------------------------------------------------
//
// Bar lists: bar(i) = universe \ {i}. Each builder takes the graph whose
// vertex indices the lists refer to (the family graph or its square; both
// share labels and order).

/// Universe 1..5. bar1 on every x_i, bar2 on y_1..y_{n-4}, bar3 on
/// y_{n-3}..y_n. Requires 4 | n, n >= 8.
ListAssignment lists_girth6(const Graph& g, int n);

/// Universe 1..5. bar4 on x_i, y_i (8 <= i <= n); bar3 on x_i, y_i
/// (i = 3,4,5); bar2 on x_1, x_2, y_6, x_7; bar1 on y_1, y_2, x_6, y_7.
/// Requires 4 | n, n >= 12.
ListAssignment lists_planar(const Graph& g, int n);

/// One permutation index (0..5, in lexicographic order of the permutations
/// of {1,2,3}) per maximum independent set.
using Lsk4Permutation = std::array<int, 4>;

/// The four maximum independent sets (size 3) of L(S(K4))^2, sorted;
/// throws unless there are exactly four and they partition the vertices.
std::vector<std::vector<int>> lsk4_independent_sets(const Graph& square_of_lsk4);

/// Universe 1..5; the r-th vertex of V_i gets bar(p[r]) where p is the
/// perm[i]-th permutation of (1,2,3).
ListAssignment lists_lsk4(const Graph& square_of_lsk4, const Lsk4Permutation& perm);

/// Universe 0..6; v_{i,j} gets {0..6} \ {L(i,j)}. Requires a 6x6 square.
ListAssignment lists_lsk6(const Graph& g, const LatinSquare& latin);

/// Universe 1..6; bar1 on x_i and bar2 on y_i for n-8 <= i <= n, bar3 on
/// every other vertex. Requires 5 | n, n >= 15.
ListAssignment lists_lp3(const Graph& g, int n);

/// Universe 1..6; bar1 on all x_i, bar2 on all y_i, bar3 on all z_i.
/// Requires 5 | n.
ListAssignment lists_lp2(const Graph& g, int n);

/// Universe 1..k+1; bar(i) on x'_{i+k-1} and y'_{i+k-1} (index mod k on
/// 1..k), bar(k+1) on X u Y.
ListAssignment lists_sharpness(const Graph& g, int k);

/// Admissible lists over 1..5: L(v) = colors of the edges at v, for an edge
/// coloring given per edge index of g.
ListAssignment lists_observ(const Graph& g, const std::vector<int>& edge_colors);

/// Transfers lists from L(S(K_t)) to chained_line_family(t, n, a, b): the
/// two line vertices at w_a and w_b keep the lists of v_{a,b} and v_{b,a}
/// (which must agree); every inserted vertex receives that common list.
ListAssignment lists_chained(const Graph& lsk, const ListAssignment& base, const Graph& chained, int a, int b);

} // namespace sqlab
