#include "sqlab/searches.hpp"

#include "sqlab/transforms.hpp"

namespace sqlab {

std::vector<Lsk4Permutation> search_bad_permutation_lsk4(const SolveOptions& opts) {
    const Graph sq = square(line_graph(subdivision(complete_graph(4))));
    std::vector<Lsk4Permutation> bad;
    Lsk4Permutation p{};
    for (p[0] = 0; p[0] < 6; ++p[0])
        for (p[1] = 0; p[1] < 6; ++p[1])
            for (p[2] = 0; p[2] < 6; ++p[2])
                for (p[3] = 0; p[3] < 6; ++p[3])
                    if (list_colorable(sq, lists_lsk4(sq, p), opts).infeasible())
                        bad.push_back(p);
    return bad;
}

std::optional<ChainedExtension> find_chained_extension(int t, int n, const SolveOptions& opts) {
    const Graph lsk = line_graph(subdivision(complete_graph(t)));
    const Graph lsk_sq = square(lsk);

    std::vector<std::pair<std::optional<Lsk4Permutation>, ListAssignment>> bases;
    if (t == 4) {
        for (const auto& p : search_bad_permutation_lsk4(opts))
            bases.emplace_back(p, lists_lsk4(lsk_sq, p));
    } else if (t == 6) {
        bases.emplace_back(std::nullopt, lists_lsk6(lsk, latin_from_factorization(one_factorization(6))));
    } else {
        return std::nullopt;
    }

    for (const auto& [perm, base] : bases)
        for (int a = 1; a <= t; ++a)
            for (int b = a + 1; b <= t; ++b) {
                const int va = lsk_vertex(lsk, a, b);
                const int vb = lsk_vertex(lsk, b, a);
                if (base.lists[static_cast<std::size_t>(va)] != base.lists[static_cast<std::size_t>(vb)])
                    continue;
                Graph chained = chained_line_family(t, n, a, b);
                ListAssignment lists = lists_chained(lsk, base, chained, a, b);
                Verdict v = list_colorable(square(chained), lists, opts);
                if (v.infeasible())
                    return ChainedExtension{t, n, a, b, perm, std::move(chained), std::move(lists), std::move(v)};
            }
    return std::nullopt;
}

} // namespace sqlab
