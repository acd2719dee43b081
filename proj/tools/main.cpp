// Command-line driver. Exit codes: 0 done, 1 usage or precondition error,
// 2 budget exceeded, 3 verdict differs from --expect (or a certificate is
// rejected / contradicts its theorem).

#include "sqlab/avoiding.hpp"
#include "sqlab/certificate.hpp"
#include "sqlab/choosability.hpp"
#include "sqlab/errors.hpp"
#include "sqlab/families.hpp"
#include "sqlab/io.hpp"
#include "sqlab/observ.hpp"
#include "sqlab/orientation.hpp"
#include "sqlab/solver.hpp"
#include "sqlab/transforms.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace sqlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitMismatch = 3;

struct ExpectMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& out, const json& j) {
    if (out.empty() || out == "-")
        std::cout << canonical_dump(j);
    else
        write_text_file(out, canonical_dump(j));
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// JSON graph, or DIMACS .col with an optional "<path>.labels.json" sidecar.
Graph load_graph(const std::string& path) {
    if (ends_with(path, ".col")) {
        std::ifstream in(path);
        if (!in)
            throw SchemaError("cannot open " + path);
        std::optional<json> sidecar;
        if (std::ifstream(path + ".labels.json"))
            sidecar = read_json_file(path + ".labels.json");
        return read_dimacs(in, sidecar);
    }
    return graph_from_json(read_json_file(path));
}

void save_graph(const std::string& path, const Graph& g) {
    if (ends_with(path, ".col")) {
        std::ostringstream os;
        write_dimacs(os, g);
        write_text_file(path, os.str());
        write_text_file(path + ".labels.json", canonical_dump(dimacs_sidecar(g)));
        return;
    }
    emit(path, graph_to_json(g));
}

struct SolveFlags {
    std::uint64_t budget_nodes = 0;
    std::uint64_t budget_ms = 0;
    unsigned threads = 0;
    bool deterministic = false;

    void add(CLI::App* app) {
        app->add_option("--budget-nodes", budget_nodes, "node budget (0 = unlimited)");
        app->add_option("--budget-ms", budget_ms, "wall-clock budget in ms (0 = unlimited)");
        app->add_option("--threads", threads, "worker threads");
        app->add_flag("--deterministic", deterministic, "canonical (lexicographically least) witnesses");
    }

    [[nodiscard]] SolveOptions options() const {
        SolveOptions o = SolveOptions::from_environment();
        if (budget_nodes)
            o.node_budget = budget_nodes;
        if (budget_ms)
            o.time_budget_ms = budget_ms;
        if (threads)
            o.threads = threads;
        o.deterministic = deterministic;
        return o;
    }
};

void check_expect(const std::string& expect, const std::string& actual) {
    if (!expect.empty() && expect != actual)
        throw ExpectMismatch("expected " + expect + ", got " + actual);
}

std::string verdict_word(const Verdict& v) { return v.feasible() ? "feasible" : v.infeasible() ? "infeasible" : "unknown"; }

int run(int argc, char** argv) {
    CLI::App app{"sqlab: exact coloring laboratory for graph squares and list assignments"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "construct a family graph");
    std::string family, out;
    int n = -1, k = -1, t = -1, a = 1, b = 2;
    std::vector<int> sizes;
    build->add_option("--family", family, "family id")->required();
    build->add_option("--n", n);
    build->add_option("--k", k);
    build->add_option("--t", t, "chained-line: base clique order");
    build->add_option("--a", a, "chained-line: first replaced vertex");
    build->add_option("--b", b, "chained-line: second replaced vertex");
    build->add_option("--sizes", sizes, "complete-multipartite part sizes")->delimiter(',');
    build->add_option("--out", out, "output path (.json or .col; default stdout)");

    // transform
    auto* transform = app.add_subcommand("transform", "apply transforms in order");
    std::vector<std::string> ops;
    std::string in;
    transform->add_option("--op", ops, "square|line|subdivide|total (repeatable)")->required();
    transform->add_option("--in", in)->required();
    transform->add_option("--out", out);

    // solve
    auto* solve = app.add_subcommand("solve", "run an exact solver");
    std::string mode, lists_path, expect, dot_path;
    int universe_cap = 0;
    SolveFlags sf;
    solve->add_option("mode", mode, "chromatic|list|avoid|choosable")
        ->required()
        ->check(CLI::IsMember({"chromatic", "list", "avoid", "choosable"}));
    solve->add_option("--in", in, "graph path")->required();
    solve->add_option("--lists", lists_path, "list assignment JSON");
    solve->add_option("--k", k, "palette size (avoid, choosable)");
    solve->add_option("--universe-cap", universe_cap, "choosable: colors 1..cap (default 2k+1)");
    solve->add_option("--expect", expect, "feasible|infeasible, or an integer for chromatic");
    solve->add_option("--emit-dot", dot_path, "write the witness as GraphViz");
    solve->add_option("--out", out);
    sf.add(solve);

    // orient
    auto* orient = app.add_subcommand("orient", "balanced orientations and the list-size harness");
    bool balanced = false, harness = false;
    std::string favored;
    std::vector<std::string> odd_set;
    int trials = 1000;
    std::uint64_t seed = 1;
    orient->add_option("--in", in)->required();
    orient->add_flag("--balanced", balanced);
    orient->add_option("--favored", favored, "favored vertex label");
    orient->add_option("--odd-set", odd_set, "labels of Z (comma separated)")->delimiter(',');
    orient->add_flag("--at-harness", harness, "run random list trials on the orientation");
    orient->add_option("--trials", trials);
    orient->add_option("--seed", seed);
    orient->add_option("--threads", sf.threads);
    orient->add_option("--out", out);

    // certify / verify
    auto* certify = app.add_subcommand("certify", "produce a theorem certificate");
    std::string theorem;
    certify->add_option("--theorem", theorem, "theorem id")->required();
    certify->add_option("--n", n);
    certify->add_option("--k", k);
    certify->add_option("--out", out);
    sf.add(certify);

    auto* verify = app.add_subcommand("verify", "re-check a certificate from scratch");
    std::string cert_path;
    verify->add_option("cert", cert_path, "certificate path")->required();
    sf.add(verify);

    // avoidnum
    auto* avoidnum = app.add_subcommand("avoidnum", "avoiding chromatic number (small graphs)");
    int m = 1;
    bool bounds = false;
    avoidnum->add_option("--in", in)->required();
    avoidnum->add_option("--m", m)->required();
    avoidnum->add_flag("--check-bounds", bounds, "also check the bound chain");
    avoidnum->add_option("--expect", expect, "expected value");

    // observ-search
    auto* observ = app.add_subcommand("observ-search", "random gadget search around P(10,3)");
    ObservOptions oo;
    std::string coloring_path;
    observ->add_option("--budget", oo.gadget_budget, "gadgets to try");
    observ->add_option("--seed", oo.seed);
    observ->add_option("--max-vertices", oo.max_new_vertices);
    observ->add_option("--max-edges", oo.max_new_edges);
    observ->add_option("--degree-cap", oo.degree_cap);
    observ->add_option("--edge-coloring", coloring_path, "JSON array of edge colors 1..5 by edge index");
    observ->add_option("--out", out);
    sf.add(observ);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (build->parsed()) {
        std::vector<int> p;
        if (family == "gen-petersen" || family == "p-nk")
            p = {n, k};
        else if (family == "chained-line")
            p = {t, n, a, b};
        else if (family == "complete-multipartite")
            p = sizes;
        else if (family == "sharpness")
            p = {k};
        else
            p = {n};
        save_graph(out, build_family({family, p}));
        return kExitOk;
    }

    if (transform->parsed()) {
        save_graph(out, apply_chain(load_graph(in), ops));
        return kExitOk;
    }

    if (solve->parsed()) {
        const Graph g = load_graph(in);
        const SolveOptions opts = sf.options();
        json result;
        std::optional<Coloring> witness;
        bool budget = false;
        if (mode == "chromatic") {
            ChromaticResult r = chromatic_number(g, opts);
            budget = r.outcome == Outcome::unknown;
            result = {{"chi", budget ? json() : json(r.value)},
                      {"lower_bound", r.lower_bound},
                      {"outcome", outcome_name(r.outcome)},
                      {"witness", budget ? json() : coloring_to_json(g, r.witness)},
                      {"nodes", r.nodes},
                      {"millis", r.elapsed.count()},
                      {"budget_hit", budget}};
            if (!budget)
                witness = r.witness;
            if (!budget && !expect.empty())
                check_expect(expect, std::to_string(r.value));
        } else if (mode == "list" || mode == "avoid") {
            if (lists_path.empty())
                throw ParameterError("solve " + mode + " needs --lists");
            ListAssignment la = lists_from_json(g, read_json_file(lists_path));
            Verdict v;
            if (mode == "avoid" || la.mode == ListMode::forbidden) {
                if (la.mode != ListMode::forbidden)
                    throw ParameterError("solve avoid needs forbidden-mode lists");
                if (k < 1)
                    throw ParameterError("forbidden lists need --k");
                v = avoid_colorable(g, k, la, opts);
            } else {
                v = list_colorable(g, la, opts);
            }
            result = verdict_to_json(g, v);
            budget = v.budget_hit();
            witness = v.witness;
            if (!budget)
                check_expect(expect, verdict_word(v));
        } else {
            if (k < 1)
                throw ParameterError("solve choosable needs --k");
            const int cap = universe_cap ? universe_cap : 2 * k + 1;
            ChoosabilityResult r = is_k_choosable(g, k, cap, opts);
            result = {{"choosable", r.choosable},
                      {"k", k},
                      {"universe_cap", cap},
                      {"bounded_verification", r.bounded_verification},
                      {"assignments_checked", r.assignments_checked},
                      {"bad_assignment", r.bad_assignment ? lists_to_json(g, *r.bad_assignment) : json()}};
            check_expect(expect, r.choosable ? "feasible" : "infeasible");
        }
        if (!dot_path.empty())
            write_text_file(dot_path, to_dot(g, witness ? &*witness : nullptr));
        emit(out, result);
        return budget ? kExitBudget : kExitOk;
    }

    if (orient->parsed()) {
        const Graph g = load_graph(in);
        std::optional<Orientation> d;
        std::optional<int> fav;
        if (!favored.empty()) {
            fav = g.index_of(VertexLabel::parse(favored));
            d = favored_orientation(g, *fav);
        } else if (!odd_set.empty()) {
            std::vector<int> Z;
            for (const auto& s : odd_set)
                Z.push_back(g.index_of(VertexLabel::parse(s)));
            d = odd_set_orientation(g, Z, static_cast<int>(Z.size()));
        } else {
            d = balanced_orientation(g);
        }
        json result = orientation_to_json(*d);
        json outdeg = json::object();
        for (int v = 0; v < g.order(); ++v)
            outdeg[g.label(v).str()] = d->out_degree(v);
        result["out_degree"] = outdeg;
        result["balanced"] = d->is_balanced();
        if (harness) {
            HarnessOptions ho;
            ho.trials = trials;
            ho.seed = seed;
            ho.favored = fav;
            ho.threads = std::max(1U, sf.threads);
            HarnessReport r = at_bound_harness(g, ho);
            result["harness"] = {{"trials", r.trials},
                                 {"feasible", r.feasible},
                                 {"infeasible", r.infeasible},
                                 {"unknown", r.unknown},
                                 {"orientation_ok", r.orientation_ok},
                                 {"counterexample", r.counterexample ? lists_to_json(g, *r.counterexample) : json()}};
        }
        emit(out, result);
        return kExitOk;
    }

    if (certify->parsed()) {
        TheoremParams p;
        if (n >= 0)
            p["n"] = n;
        if (k >= 0)
            p["k"] = k;
        const Certificate c = make_certificate(theorem, p, sf.options());
        emit(out, certificate_to_json(c));
        if (!out.empty() && out != "-")
            std::cerr << theorem << ": chi=" << c.chi << ", certificate written to " << out << '\n';
        return kExitOk;
    }

    if (verify->parsed()) {
        const VerificationReport r = verify_certificate(read_json_file(cert_path), sf.options());
        std::cout << r.describe();
        return r.ok ? kExitOk : kExitMismatch;
    }

    if (avoidnum->parsed()) {
        const Graph g = load_graph(in);
        json result = {{"m", m}, {"value", avoiding_chromatic(g, m)}};
        if (bounds && m >= 1) {
            const AvoidingBounds ab = check_avoiding_bounds(g, m);
            result["bounds"] = {{"chi", ab.chi},
                                {"list_chi", ab.list_chi},
                                {"list_chi_bounded", ab.list_chi_bounded},
                                {"previous", ab.prev},
                                {"chain_holds", ab.chain_holds},
                                {"sandwich_holds", ab.sandwich_holds}};
        }
        emit(out, result);
        check_expect(expect, std::to_string(result["value"].get<int>()));
        return kExitOk;
    }

    if (observ->parsed()) {
        std::optional<std::vector<int>> colors;
        if (!coloring_path.empty())
            colors = read_json_file(coloring_path).get<std::vector<int>>();
        oo.solve = sf.options();
        const ObservReport r = observ_search(colors, oo);
        json wit = json::array();
        for (const auto& w : r.witnesses)
            wit.push_back({{"index", w.index},
                           {"graph", graph_to_json(w.graph)},
                           {"lists", lists_to_json(w.graph, w.lists)},
                           {"nodes", w.verdict.nodes}});
        emit(out, {{"edge_coloring", r.edge_coloring},
                   {"base", verdict_to_json(gen_petersen(10, 3), r.base_verdict)},
                   {"tried", r.tried},
                   {"unknown", r.unknown},
                   {"complete", r.complete()},
                   {"witnesses", wit}});
        return r.complete() ? kExitOk : kExitBudget;
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ExpectMismatch& e) {
        std::cerr << "expect mismatch: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const VerdictMismatch& e) {
        std::cerr << "verdict mismatch: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
