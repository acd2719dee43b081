#include "sqlab/solver.hpp"

#include "sqlab/errors.hpp"
#include "sqlab/structure.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace sqlab {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    const char* s = std::getenv(name);
    if (!s || !*s)
        return fallback;
    char* end = nullptr;
    auto v = std::strtoull(s, &end, 10);
    return (end && *end == '\0') ? v : fallback;
}

/// Shared limits and counters for one decision, possibly across threads.
struct SearchControl {
    std::uint64_t node_budget = 0;
    Clock::time_point deadline = Clock::time_point::max();
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> budget_hit{false};

    bool charge() {
        auto n = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (node_budget && n > node_budget) {
            budget_hit = true;
            stop = true;
        } else if ((n & 1023U) == 0 && Clock::now() > deadline) {
            budget_hit = true;
            stop = true;
        }
        return !stop.load(std::memory_order_relaxed);
    }
};

struct State {
    std::vector<std::uint64_t> dom;
    std::vector<signed char> val; // bit index of the assigned color or -1
};

/// Domain-bitmask backtracking engine over colors remapped to bit positions.
class Engine {
public:
    Engine(const Graph& g, std::vector<std::uint64_t> domains) : n_(g.order()) {
        nbrs_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            g.neighbor_set(v).for_each([&](std::size_t w) { nbrs_[static_cast<std::size_t>(v)].push_back(static_cast<int>(w)); });
        root_.dom = std::move(domains);
        root_.val.assign(static_cast<std::size_t>(n_), -1);
    }

    /// Applies the initial propagation; false when already contradictory.
    bool prepare() {
        std::vector<int> queue;
        for (int v = 0; v < n_; ++v) {
            auto d = root_.dom[static_cast<std::size_t>(v)];
            if (d == 0)
                return false;
            if (std::popcount(d) == 1)
                queue.push_back(v);
        }
        return drain(root_, queue);
    }

    const State& root() const { return root_; }

    /// Depth-first search from `s`; on success `s` holds a full assignment.
    bool search(State& s, SearchControl& ctl) const {
        int best = -1;
        int best_size = 65;
        for (int v = 0; v < n_; ++v)
            if (s.val[static_cast<std::size_t>(v)] < 0) {
                int sz = std::popcount(s.dom[static_cast<std::size_t>(v)]);
                if (sz < best_size) {
                    best_size = sz;
                    best = v;
                    if (sz <= 1)
                        break;
                }
            }
        if (best < 0)
            return true;
        std::uint64_t d = s.dom[static_cast<std::size_t>(best)];
        while (d) {
            const int c = std::countr_zero(d);
            d &= d - 1;
            if (!ctl.charge())
                return false;
            State child = s;
            if (assign(child, best, c) && search(child, ctl)) {
                s = std::move(child);
                return true;
            }
            if (ctl.stop.load(std::memory_order_relaxed))
                return false;
        }
        return false;
    }

    /// Splits the search below `s` into independent subproblems by branching
    /// on the first few choice points.
    void split(const State& s, int depth, std::vector<State>& out) const {
        int best = -1;
        int best_size = 65;
        for (int v = 0; v < n_; ++v)
            if (s.val[static_cast<std::size_t>(v)] < 0) {
                int sz = std::popcount(s.dom[static_cast<std::size_t>(v)]);
                if (sz < best_size) {
                    best_size = sz;
                    best = v;
                }
            }
        if (best < 0 || depth == 0) {
            out.push_back(s);
            return;
        }
        std::uint64_t d = s.dom[static_cast<std::size_t>(best)];
        while (d) {
            const int c = std::countr_zero(d);
            d &= d - 1;
            State child = s;
            if (assign(child, best, c))
                split(child, depth - 1, out);
        }
    }

    bool assign(State& s, int v, int c) const {
        s.dom[static_cast<std::size_t>(v)] = std::uint64_t{1} << c;
        std::vector<int> queue{v};
        return drain(s, queue);
    }

private:
    int n_;
    std::vector<std::vector<int>> nbrs_;
    State root_;

    // Assigns every queued singleton and removes its color from unassigned
    // neighbors, queueing any neighbor that becomes forced.
    bool drain(State& s, std::vector<int>& queue) const {
        while (!queue.empty()) {
            const int v = queue.back();
            queue.pop_back();
            if (s.val[static_cast<std::size_t>(v)] >= 0)
                continue;
            const std::uint64_t bit = s.dom[static_cast<std::size_t>(v)];
            s.val[static_cast<std::size_t>(v)] = static_cast<signed char>(std::countr_zero(bit));
            for (int w : nbrs_[static_cast<std::size_t>(v)]) {
                auto& dw = s.dom[static_cast<std::size_t>(w)];
                if (!(dw & bit))
                    continue;
                if (s.val[static_cast<std::size_t>(w)] >= 0)
                    return false;
                dw &= ~bit;
                if (dw == 0)
                    return false;
                if ((dw & (dw - 1)) == 0)
                    queue.push_back(w);
            }
        }
        return true;
    }
};

/// Runs one decision: sequential, or split across worker threads.
/// Returns the satisfying state when one is found.
std::optional<State> run_engine(Engine& engine, SearchControl& ctl, unsigned threads) {
    if (!engine.prepare())
        return std::nullopt;
    if (threads <= 1) {
        State s = engine.root();
        if (engine.search(s, ctl))
            return s;
        return std::nullopt;
    }
    std::vector<State> tasks;
    engine.split(engine.root(), 3, tasks);
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::optional<std::size_t> found_task;
    std::optional<State> found;
    auto worker = [&] {
        while (!ctl.stop.load()) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size())
                return;
            State s = tasks[i];
            // A fully assigned task needs no search.
            if (engine.search(s, ctl)) {
                std::lock_guard lock(mu);
                if (!found_task || i < *found_task) {
                    found_task = i;
                    found = std::move(s);
                }
                ctl.stop = true;
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    // Clear the "solution found" signal so later runs on this control work.
    if (!ctl.budget_hit)
        ctl.stop = false;
    return found;
}

struct Palette {
    std::vector<int> colors; // bit index -> color value

    int bit_of(int color) const {
        auto it = std::lower_bound(colors.begin(), colors.end(), color);
        return (it != colors.end() && *it == color) ? static_cast<int>(it - colors.begin()) : -1;
    }
};

Palette make_palette(const ListAssignment& lists) {
    Palette p;
    p.colors = lists.universe;
    for (const auto& l : lists.lists)
        p.colors.insert(p.colors.end(), l.begin(), l.end());
    std::sort(p.colors.begin(), p.colors.end());
    p.colors.erase(std::unique(p.colors.begin(), p.colors.end()), p.colors.end());
    if (p.colors.size() > 64)
        throw ParameterError("list coloring supports at most 64 distinct colors");
    return p;
}

Verdict decide(const Graph& g, const Palette& palette, std::vector<std::uint64_t> domains, const SolveOptions& opts,
               SearchControl& ctl) {
    Verdict out;
    Engine engine(g, std::move(domains));
    auto found = run_engine(engine, ctl, std::max(1U, opts.threads));
    out.nodes = ctl.nodes.load();
    if (found) {
        Coloring c;
        c.color.reserve(found->val.size());
        for (auto b : found->val)
            c.color.push_back(palette.colors[static_cast<std::size_t>(b)]);
        out.outcome = Outcome::feasible;
        out.witness = std::move(c);
    } else {
        out.outcome = ctl.budget_hit ? Outcome::unknown : Outcome::infeasible;
    }
    return out;
}

void init_control(SearchControl& ctl, const SolveOptions& opts, Clock::time_point start) {
    ctl.node_budget = opts.node_budget;
    if (opts.time_budget_ms)
        ctl.deadline = start + std::chrono::milliseconds(opts.time_budget_ms);
}

std::vector<std::uint64_t> domains_of(const Graph& g, const ListAssignment& lists, const Palette& palette) {
    std::vector<std::uint64_t> dom(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v)
        for (int c : lists.lists[static_cast<std::size_t>(v)])
            dom[static_cast<std::size_t>(v)] |= std::uint64_t{1} << palette.bit_of(c);
    return dom;
}

// Lowers the witness to the lexicographically least coloring: for each
// vertex in index order, the smallest color that still extends the fixed
// prefix.
void canonicalize(const Graph& g, const Palette& palette, const std::vector<std::uint64_t>& domains,
                  Coloring& witness, SearchControl& ctl) {
    std::vector<std::uint64_t> fixed = domains;
    for (int v = 0; v < g.order(); ++v) {
        const int current = palette.bit_of(witness.of(v));
        std::uint64_t below = fixed[static_cast<std::size_t>(v)] & ((std::uint64_t{1} << current) - 1);
        while (below) {
            const int c = std::countr_zero(below);
            below &= below - 1;
            auto trial = fixed;
            trial[static_cast<std::size_t>(v)] = std::uint64_t{1} << c;
            Engine engine(g, trial);
            auto found = run_engine(engine, ctl, 1);
            if (ctl.budget_hit)
                return;
            if (found) {
                for (int w = 0; w < g.order(); ++w)
                    witness.color[static_cast<std::size_t>(w)] =
                        palette.colors[static_cast<std::size_t>(found->val[static_cast<std::size_t>(w)])];
                break;
            }
        }
        fixed[static_cast<std::size_t>(v)] = std::uint64_t{1} << palette.bit_of(witness.of(v));
    }
}

} // namespace

SolveOptions SolveOptions::from_environment() {
    SolveOptions o;
    o.threads = static_cast<unsigned>(env_u64("SQLAB_THREADS", 1));
    o.node_budget = env_u64("SQLAB_BUDGET_NODES", 0);
    o.time_budget_ms = env_u64("SQLAB_BUDGET_MS", 0);
    return o;
}

std::string outcome_name(Outcome o) {
    switch (o) {
    case Outcome::feasible:
        return "feasible";
    case Outcome::infeasible:
        return "infeasible";
    case Outcome::unknown:
        break;
    }
    return "unknown (budget)";
}

Verdict list_colorable(const Graph& g, const ListAssignment& lists, const SolveOptions& opts) {
    if (lists.mode != ListMode::admissible)
        throw ParameterError("list_colorable needs admissible lists; use avoid_colorable for forbidden lists");
    if (static_cast<int>(lists.lists.size()) != g.order())
        throw ParameterError("list assignment does not cover every vertex");
    const auto start = Clock::now();
    SearchControl ctl;
    init_control(ctl, opts, start);
    const Palette palette = make_palette(lists);
    auto domains = domains_of(g, lists, palette);
    Verdict out = decide(g, palette, domains, opts, ctl);
    if (out.feasible() && opts.deterministic) {
        canonicalize(g, palette, domains, *out.witness, ctl);
        out.nodes = ctl.nodes.load();
        if (ctl.budget_hit) {
            out.outcome = Outcome::unknown;
            out.witness.reset();
        }
    }
    out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return out;
}

Coloring dsatur_coloring(const Graph& g) {
    const int n = g.order();
    Coloring c{std::vector<int>(static_cast<std::size_t>(n), 0)};
    std::vector<std::vector<char>> seen(static_cast<std::size_t>(n));
    std::vector<int> saturation(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (c.of(v))
                continue;
            if (pick < 0 || saturation[static_cast<std::size_t>(v)] > saturation[static_cast<std::size_t>(pick)] ||
                (saturation[static_cast<std::size_t>(v)] == saturation[static_cast<std::size_t>(pick)] &&
                 g.degree(v) > g.degree(pick)))
                pick = v;
        }
        auto& used = seen[static_cast<std::size_t>(pick)];
        int color = 1;
        while (color < static_cast<int>(used.size()) && used[static_cast<std::size_t>(color)])
            ++color;
        c.color[static_cast<std::size_t>(pick)] = color;
        for (int w : g.neighbors(pick)) {
            auto& uw = seen[static_cast<std::size_t>(w)];
            if (static_cast<int>(uw.size()) <= color)
                uw.resize(static_cast<std::size_t>(color) + 1, 0);
            if (!uw[static_cast<std::size_t>(color)]) {
                uw[static_cast<std::size_t>(color)] = 1;
                ++saturation[static_cast<std::size_t>(w)];
            }
        }
    }
    return c;
}

ChromaticResult chromatic_number(const Graph& g, const SolveOptions& opts) {
    const auto start = Clock::now();
    ChromaticResult out;
    if (g.order() == 0) {
        out.outcome = Outcome::feasible;
        return out;
    }
    const auto clique = maximum_clique(g);
    out.lower_bound = static_cast<int>(clique.size());
    Coloring greedy = dsatur_coloring(g);
    const int upper = greedy.distinct_colors();
    out.value = upper;
    out.witness = greedy;
    out.outcome = Outcome::feasible;

    SearchControl ctl;
    init_control(ctl, opts, start);
    for (int k = out.lower_bound; k < upper; ++k) {
        if (k > 64)
            throw ParameterError("chromatic_number supports at most 64 colors");
        Palette palette;
        for (int c = 1; c <= k; ++c)
            palette.colors.push_back(c);
        const std::uint64_t all = (k == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
        std::vector<std::uint64_t> dom(static_cast<std::size_t>(g.order()), all);
        for (std::size_t i = 0; i < clique.size(); ++i)
            dom[static_cast<std::size_t>(clique[i])] = std::uint64_t{1} << i;
        Verdict v = decide(g, palette, dom, opts, ctl);
        if (v.budget_hit()) {
            out.outcome = Outcome::unknown;
            break;
        }
        if (v.feasible()) {
            out.value = k;
            out.witness = *v.witness;
            break;
        }
    }
    out.nodes = ctl.nodes.load();
    out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return out;
}

Verdict forbidding_infeasible(const Graph& g, int k, const std::vector<int>& c0, const SolveOptions& opts) {
    if (static_cast<int>(c0.size()) != g.order())
        throw ParameterError("c0 must give one color per vertex");
    ListAssignment forbidden;
    forbidden.mode = ListMode::forbidden;
    for (int c = 1; c <= k; ++c)
        forbidden.universe.push_back(c);
    for (int c : c0)
        forbidden.lists.push_back({c});
    return avoid_colorable(g, k, forbidden, opts);
}

Verdict avoid_colorable(const Graph& g, int k, const ListAssignment& forbidden, const SolveOptions& opts) {
    if (forbidden.mode != ListMode::forbidden)
        throw ParameterError("avoid_colorable needs forbidden-mode lists");
    if (static_cast<int>(forbidden.lists.size()) != g.order())
        throw ParameterError("list assignment does not cover every vertex");
    if (k < 0)
        throw ParameterError("palette size must be nonnegative");
    ListAssignment norm = forbidden;
    norm.normalize();
    return list_colorable(g, palette_complement(norm, k), opts);
}

} // namespace sqlab
