#pragma once

#include "sqlab/coloring.hpp"
#include "sqlab/graph.hpp"
#include "sqlab/solver.hpp"

#include <cstdint>
#include <optional>

namespace sqlab {

struct ChoosabilityResult {
    bool choosable = false;
    /// True verdict only covers lists drawn from 1..universe_cap, which is
    /// smaller than the |V|*k colors that make enumeration complete.
    bool bounded_verification = false;
    std::optional<ListAssignment> bad_assignment; ///< present when !choosable
    std::uint64_t assignments_checked = 0;
};

/// Decides k-choosability over lists of exactly k colors from 1..universe_cap.
///
/// Vertices of degree < k are peeled first (they never obstruct), then the
/// remaining core is enumerated with colors introduced in first-use order,
/// which covers every assignment up to renaming colors; the first vertex
/// therefore always gets {1..k}. Every partial assignment is tested on the
/// prefix it covers, so a bad prefix ends the search immediately. A false
/// verdict always carries a concrete bad assignment for the whole graph.
ChoosabilityResult is_k_choosable(const Graph& g, int k, int universe_cap, const SolveOptions& opts = {});

/// Smallest k for which is_k_choosable(g, k, 2k+1) holds, starting from
/// chi(g). `bounded` reports whether that final verdict was bounded.
int list_chromatic_number_bounded(const Graph& g, bool* bounded = nullptr);

} // namespace sqlab
