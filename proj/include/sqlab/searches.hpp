#pragma once

#include "sqlab/families.hpp"
#include "sqlab/solver.hpp"

#include <optional>
#include <vector>

namespace sqlab {

/// Every way of distributing bar1, bar2, bar3 over each of the four
/// maximum independent sets of L(S(K4))^2 (6^4 = 1296 cases) for which the
/// resulting lists admit no coloring.
std::vector<Lsk4Permutation> search_bad_permutation_lsk4(const SolveOptions& opts = {});

/// An infeasible list assignment on the square of chained_line_family(t, n)
/// obtained by transferring an infeasible L(S(K_t))^2 assignment and giving
/// the shared list of the replaced pair to all inserted vertices.
struct ChainedExtension {
    int t = 0;
    int n = 0;
    int a = 0;
    int b = 0;
    std::optional<Lsk4Permutation> permutation; ///< base assignment for t = 4
    Graph graph;                                ///< chained_line_family(t, n, a, b)
    ListAssignment lists;
    Verdict verdict;
};

/// Searches base assignments (all infeasible permutations for t = 4, the
/// round-robin Latin lists for t = 6) and replaced pairs (a, b) in order;
/// returns the first extension whose square is not list colorable.
std::optional<ChainedExtension> find_chained_extension(int t, int n, const SolveOptions& opts = {});

} // namespace sqlab
