#include "sqlab/certificate.hpp"

#include "sqlab/errors.hpp"
#include "sqlab/searches.hpp"
#include "sqlab/transforms.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>

namespace sqlab {

namespace {

const std::vector<std::string> kLineSquare{"line", "square"};
const std::vector<std::string> kLskSquare{"subdivide", "line", "square"};
const std::vector<std::string> kSquare{"square"};

} // namespace

const std::vector<TheoremInfo>& theorem_registry() {
    static const std::vector<TheoremInfo> table{
        {"thm-2.1", "square of the girth-6 cubic bipartite family: 4-chromatic, bar-lists over 1..5 not colorable",
         {{"n", 8}}},
        {"thm-2.2", "square of the planar cubic bipartite family: 4-chromatic, bar-lists over Z_5 not colorable",
         {{"n", 12}}},
        {"thm-3.1", "square of L(S(K4)): 4-chromatic, bar1/bar2/bar3 on each maximum independent set not colorable",
         {}},
        {"cor-3.2", "square of the chained K4-minus-edge family: 4-chromatic, bar-list extension not colorable",
         {{"n", 1}}},
        {"thm-3.3", "square of L(S(K6)): 6-chromatic, Latin-square bar-lists over 0..6 not colorable", {}},
        {"cor-3.4", "square of the chained K6-minus-edge family: 6-chromatic, bar-list extension not colorable",
         {{"n", 1}}},
        {"petersen-line",
         "square of the Petersen line graph is complete multipartite with five parts of size 3, chromatic number 5",
         {},
         false},
        {"thm-lp3", "square of L(P(n,3)): 5-chromatic, bar1/bar2/bar3 lists over 1..6 not colorable", {{"n", 15}}},
        {"thm-lp2", "square of L(P(n,2)): 5-chromatic, bar1/bar2/bar3 lists over 1..6 not colorable", {{"n", 10}}},
        {"thm-4.1", "(2k-2)-regular k-chromatic graph that is not k-choosable", {{"k", 3}}},
    };
    return table;
}

const TheoremInfo& theorem_info(const std::string& id) {
    for (const auto& t : theorem_registry())
        if (t.id == id)
            return t;
    throw ParameterError("unknown theorem id '" + id + "'");
}

namespace {

TheoremParams merge_params(const TheoremInfo& info, const TheoremParams& given) {
    TheoremParams p = info.defaults;
    for (const auto& [key, value] : given) {
        if (!info.defaults.contains(key))
            throw ParameterError("theorem " + info.id + " takes no parameter '" + key + "'");
        p[key] = value;
    }
    return p;
}

// What a theorem id pins down before any search: family name, chain, chi
// and (except for the chained families) the family parameters.
struct Shape {
    FamilyDescriptor family;
    std::vector<std::string> chain;
    int chi = 0;
    bool params_exact = true;
};

Shape shape_for(const std::string& id, const TheoremParams& p) {
    auto get = [&](const char* k) { return p.at(k); };
    auto need = [&](bool ok, const char* what) {
        if (!ok)
            throw ParameterError(id + " needs " + what);
    };
    if (id == "thm-2.1")
        need(get("n") >= 8 && get("n") % 4 == 0, "n >= 8 with 4 | n");
    if (id == "thm-2.2")
        need(get("n") >= 12 && get("n") % 4 == 0, "n >= 12 with 4 | n");
    if (id == "cor-3.2" || id == "cor-3.4")
        need(get("n") >= 1, "n >= 1");
    if (id == "thm-lp3")
        need(get("n") >= 15 && get("n") % 5 == 0, "n >= 15 with 5 | n");
    if (id == "thm-lp2")
        need(get("n") >= 5 && get("n") % 5 == 0, "5 | n");
    if (id == "thm-2.1")
        return {{"girth6-cubic", {get("n")}}, kSquare, 4};
    if (id == "thm-2.2")
        return {{"planar-cubic", {get("n")}}, kSquare, 4};
    if (id == "thm-3.1")
        return {{"complete", {4}}, kLskSquare, 4};
    if (id == "cor-3.2")
        return {{"chained-line", {4, get("n")}}, kSquare, 4, false};
    if (id == "thm-3.3")
        return {{"complete", {6}}, kLskSquare, 6};
    if (id == "cor-3.4")
        return {{"chained-line", {6, get("n")}}, kSquare, 6, false};
    if (id == "petersen-line")
        return {{"gen-petersen", {5, 2}}, kLineSquare, 5};
    if (id == "thm-lp3")
        return {{"gen-petersen", {get("n"), 3}}, kLineSquare, 5};
    if (id == "thm-lp2")
        return {{"gen-petersen", {get("n"), 2}}, kLineSquare, 5};
    if (id == "thm-4.1") {
        if (get("k") < 3)
            throw ParameterError("thm-4.1 needs k >= 3");
        return {{"sharpness", {get("k")}}, {}, get("k")};
    }
    throw ParameterError("unknown theorem id '" + id + "'");
}

std::optional<Coloring> explicit_coloring(const std::string& id, const TheoremParams& p, const Graph& target) {
    if (id == "thm-2.1")
        return coloring_girth6_square(target, p.at("n"));
    if (id == "thm-2.2")
        return coloring_planar_square(target, p.at("n"));
    if (id == "thm-3.3")
        return coloring_lsk_square(target, 6);
    if (id == "thm-lp3")
        return coloring_lp3_square(target, p.at("n"));
    if (id == "thm-lp2")
        return coloring_lp2_square(target, p.at("n"));
    if (id == "thm-4.1")
        return coloring_sharpness(target, p.at("k"));
    return std::nullopt;
}

std::string perm_text(const Lsk4Permutation& perm) {
    std::ostringstream os;
    os << perm[0] << ',' << perm[1] << ',' << perm[2] << ',' << perm[3];
    return os.str();
}

json structure_to_json(const StructureReport& s) {
    return {{"is_bipartite", s.is_bipartite},
            {"regular_degree", s.regular_degree ? json(*s.regular_degree) : json()},
            {"girth", s.girth ? json(*s.girth) : json()},
            {"clique_number", s.clique_number},
            {"is_claw_free", s.is_claw_free},
            {"max_degree", s.max_degree}};
}

StructureReport structure_from_json(const json& j) {
    try {
        StructureReport s;
        s.is_bipartite = j.at("is_bipartite").get<bool>();
        if (!j.at("regular_degree").is_null())
            s.regular_degree = j.at("regular_degree").get<int>();
        if (!j.at("girth").is_null())
            s.girth = j.at("girth").get<int>();
        s.clique_number = j.at("clique_number").get<int>();
        s.is_claw_free = j.at("is_claw_free").get<bool>();
        s.max_degree = j.at("max_degree").get<int>();
        return s;
    } catch (const json::exception& e) {
        throw SchemaError(std::string("bad structure record: ") + e.what());
    }
}

bool same_structure(const StructureReport& a, const StructureReport& b) {
    return a.is_bipartite == b.is_bipartite && a.regular_degree == b.regular_degree && a.girth == b.girth &&
           a.clique_number == b.clique_number && a.is_claw_free == b.is_claw_free && a.max_degree == b.max_degree;
}

} // namespace

std::string graph_digest(const Graph& g) {
    const std::string text = canonical_dump(graph_to_json(g));
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 computation failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

Graph rebuild_graph(const Certificate& c) { return apply_chain(build_family(c.family), c.transform_chain); }

Certificate make_certificate(const std::string& theorem_id, const TheoremParams& params, const SolveOptions& opts) {
    const TheoremInfo& info = theorem_info(theorem_id);
    Certificate c;
    c.theorem_id = theorem_id;
    c.provenance = info.provenance;
    c.params = merge_params(info, params);
    Shape shape = shape_for(theorem_id, c.params);
    c.family = shape.family;
    c.transform_chain = shape.chain;

    std::optional<ListAssignment> lists;
    if (theorem_id == "thm-3.1") {
        const auto bad = search_bad_permutation_lsk4(opts);
        if (bad.empty())
            throw VerdictMismatch("thm-3.1: every distribution of bar1, bar2, bar3 is colorable");
        const Graph sq = apply_chain(build_family(c.family), c.transform_chain);
        lists = lists_lsk4(sq, bad.front());
        c.notes.push_back("independent-set permutation " + perm_text(bad.front()) + " (first of " +
                          std::to_string(bad.size()) + " infeasible)");
    } else if (theorem_id == "cor-3.2" || theorem_id == "cor-3.4") {
        const int t = shape.family.params[0];
        const int n = c.params.at("n");
        auto ext = find_chained_extension(t, n, opts);
        if (!ext)
            throw VerdictMismatch(theorem_id + ": no infeasible bar-list extension found");
        c.family.params = {t, n, ext->a, ext->b};
        lists = ext->lists;
        c.notes.push_back("replaced pair w" + std::to_string(ext->a) + " w" + std::to_string(ext->b));
        if (ext->permutation)
            c.notes.push_back("base permutation " + perm_text(*ext->permutation));
    }

    const Graph base = build_family(c.family);
    const Graph target = apply_chain(base, c.transform_chain);
    c.base_structure = structure_report(base);
    c.structure = structure_report(target);

    if (theorem_id == "petersen-line") {
        c.multipartite_parts = is_complete_multipartite(target);
        if (c.multipartite_parts != std::vector<int>{3, 3, 3, 3, 3})
            throw VerdictMismatch("petersen-line: square is not complete multipartite [3,3,3,3,3]");
        c.notes.push_back("list chromatic number 7 is not verified");
    }

    ChromaticResult chi = chromatic_number(target, opts);
    if (chi.outcome == Outcome::unknown)
        throw BudgetExceeded(theorem_id + ": chromatic number search ran out of budget");
    if (chi.value != shape.chi)
        throw VerdictMismatch(theorem_id + ": chromatic number is " + std::to_string(chi.value) + ", expected " +
                              std::to_string(shape.chi));
    c.chi = chi.value;
    c.chi_nodes = chi.nodes;
    if (auto rule = explicit_coloring(theorem_id, c.params, target)) {
        const auto viol = validate_coloring(target, *rule);
        if (!viol.ok() || rule->distinct_colors() != c.chi)
            throw VerdictMismatch(theorem_id + ": explicit coloring rule fails: " + viol.describe(target));
        c.chi_witness = *rule;
        c.witness_rule = "explicit";
    } else {
        c.chi_witness = chi.witness;
        c.witness_rule = "solver";
    }

    if (info.has_list_claim) {
        if (!lists) {
            const int n = c.params.contains("n") ? c.params.at("n") : 0;
            if (theorem_id == "thm-2.1")
                lists = lists_girth6(target, n);
            else if (theorem_id == "thm-2.2")
                lists = lists_planar(target, n);
            else if (theorem_id == "thm-3.3")
                lists = lists_lsk6(target, latin_from_factorization(one_factorization(6)));
            else if (theorem_id == "thm-lp3")
                lists = lists_lp3(target, n);
            else if (theorem_id == "thm-lp2")
                lists = lists_lp2(target, n);
            else if (theorem_id == "thm-4.1")
                lists = lists_sharpness(target, c.params.at("k"));
        }
        Verdict v = list_colorable(target, *lists, opts);
        if (v.budget_hit())
            throw BudgetExceeded(theorem_id + ": list coloring search ran out of budget");
        if (v.feasible())
            throw VerdictMismatch(theorem_id + ": the claimed lists are colorable");
        c.lists = std::move(lists);
        c.list_nodes = v.nodes;
        c.list_millis = v.elapsed.count();
    }
    c.graph_digest = graph_digest(target);
    return c;
}

json certificate_to_json(const Certificate& c) {
    const Graph target = rebuild_graph(c);
    json params = json::object();
    for (const auto& [k, v] : c.params)
        params[k] = v;
    json claim;
    if (c.lists)
        claim = {{"kind", "lists"}, {"assignment", lists_to_json(target, *c.lists)}};
    return {{"schema_version", c.schema_version},
            {"kind", "sqlab-certificate"},
            {"theorem_id", c.theorem_id},
            {"provenance", c.provenance},
            {"params", params},
            {"family", {{"name", c.family.name}, {"params", c.family.params}}},
            {"transform_chain", c.transform_chain},
            {"structure", {{"base", structure_to_json(c.base_structure)}, {"target", structure_to_json(c.structure)}}},
            {"multipartite_parts", c.multipartite_parts ? json(*c.multipartite_parts) : json()},
            {"chi_claim",
             {{"chi", c.chi}, {"witness_rule", c.witness_rule}, {"witness", coloring_to_json(target, c.chi_witness)}}},
            {"infeasibility_claim", claim},
            {"solver_stats",
             {{"chi_nodes", c.chi_nodes}, {"list_nodes", c.list_nodes}, {"list_millis", c.list_millis}}},
            {"notes", c.notes},
            {"graph_digest", c.graph_digest}};
}

Certificate certificate_from_json(const json& j) {
    if (!j.is_object())
        throw SchemaError("certificate must be a JSON object");
    Certificate c;
    try {
        c.schema_version = j.at("schema_version").get<int>();
        if (c.schema_version != kSchemaVersion)
            throw SchemaError("unsupported schema_version " + std::to_string(c.schema_version));
        if (j.value("kind", std::string()) != "sqlab-certificate")
            throw SchemaError("not a certificate document");
        c.theorem_id = j.at("theorem_id").get<std::string>();
        c.provenance = j.at("provenance").get<std::string>();
        for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it)
            c.params[it.key()] = it.value().get<int>();
        c.family.name = j.at("family").at("name").get<std::string>();
        c.family.params = j.at("family").at("params").get<std::vector<int>>();
        c.transform_chain = j.at("transform_chain").get<std::vector<std::string>>();
        c.base_structure = structure_from_json(j.at("structure").at("base"));
        c.structure = structure_from_json(j.at("structure").at("target"));
        if (!j.at("multipartite_parts").is_null())
            c.multipartite_parts = j.at("multipartite_parts").get<std::vector<int>>();
        c.chi = j.at("chi_claim").at("chi").get<int>();
        c.witness_rule = j.at("chi_claim").at("witness_rule").get<std::string>();
        c.notes = j.at("notes").get<std::vector<std::string>>();
        c.chi_nodes = j.at("solver_stats").at("chi_nodes").get<std::uint64_t>();
        c.list_nodes = j.at("solver_stats").at("list_nodes").get<std::uint64_t>();
        c.list_millis = j.at("solver_stats").at("list_millis").get<long long>();
        c.graph_digest = j.at("graph_digest").get<std::string>();
    } catch (const json::exception& e) {
        throw SchemaError(std::string("malformed certificate: ") + e.what());
    }
    Graph target;
    try {
        target = rebuild_graph(c);
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("certificate family cannot be rebuilt: ") + e.what());
    }
    c.chi_witness = coloring_from_json(target, j.at("chi_claim").at("witness"));
    const json& claim = j.at("infeasibility_claim");
    if (!claim.is_null()) {
        if (claim.value("kind", std::string()) != "lists" || !claim.contains("assignment"))
            throw SchemaError("unknown infeasibility claim");
        c.lists = lists_from_json(target, claim.at("assignment"));
    }
    return c;
}

std::string VerificationReport::describe() const {
    std::ostringstream os;
    for (const auto& s : checks)
        os << "  ok    " << s << '\n';
    for (const auto& s : failures)
        os << "  FAIL  " << s << '\n';
    os << (ok ? "certificate verified" : "certificate REJECTED") << '\n';
    return os.str();
}

VerificationReport verify_certificate(const Certificate& c, const SolveOptions& opts) {
    VerificationReport r;
    auto check = [&](bool pass, const std::string& what) {
        (pass ? r.checks : r.failures).push_back(what);
        return pass;
    };

    const TheoremInfo* info = nullptr;
    try {
        info = &theorem_info(c.theorem_id);
    } catch (const ParameterError& e) {
        check(false, e.what());
        return r;
    }
    Shape shape;
    try {
        shape = shape_for(c.theorem_id, merge_params(*info, c.params));
    } catch (const std::invalid_argument& e) {
        check(false, std::string("parameters: ") + e.what());
        return r;
    }
    const bool family_ok =
        c.family.name == shape.family.name && c.transform_chain == shape.chain &&
        (shape.params_exact ? c.family.params == shape.family.params
                            : c.family.params.size() == 4 &&
                                  std::equal(shape.family.params.begin(), shape.family.params.end(),
                                             c.family.params.begin()));
    if (!check(family_ok, "family and transform chain match " + c.theorem_id))
        return r;

    Graph target;
    Graph base;
    try {
        base = build_family(c.family);
        target = apply_chain(base, c.transform_chain);
    } catch (const std::invalid_argument& e) {
        check(false, std::string("rebuild: ") + e.what());
        return r;
    }
    const std::string digest = graph_digest(target);
    check(digest == c.graph_digest, "graph digest " + digest.substr(0, 16) +
                                        (digest == c.graph_digest ? "" : " != stored " + c.graph_digest.substr(0, 16)));
    const StructureReport st = structure_report(target);
    check(same_structure(st, c.structure) && same_structure(structure_report(base), c.base_structure),
          "structure snapshot");
    if (c.theorem_id == "petersen-line")
        check(is_complete_multipartite(target) == std::vector<int>{3, 3, 3, 3, 3} &&
                  c.multipartite_parts == std::vector<int>{3, 3, 3, 3, 3},
              "complete multipartite [3,3,3,3,3]");

    // chi claim: witness is a proper chi-coloring, and chi-1 colors fail
    check(c.chi == shape.chi, "chi = " + std::to_string(c.chi));
    if (c.chi_witness.color.size() != static_cast<std::size_t>(target.order())) {
        check(false, "witness covers every vertex");
    } else {
        const auto viol = validate_coloring(target, c.chi_witness);
        bool in_range = true;
        for (int col : c.chi_witness.color)
            in_range = in_range && col >= 1 && col <= c.chi;
        check(viol.ok(), viol.ok() ? "witness is proper" : "witness: " + viol.describe(target));
        check(in_range && c.chi_witness.distinct_colors() == c.chi,
              "witness uses exactly " + std::to_string(c.chi) + " colors");
    }
    if (st.clique_number >= c.chi) {
        check(true, "clique of size " + std::to_string(st.clique_number) + " bounds chi from below");
    } else {
        std::vector<int> fewer;
        for (int col = 1; col < c.chi; ++col)
            fewer.push_back(col);
        Verdict v = list_colorable(target, uniform_lists(target.order(), fewer, fewer), opts);
        check(v.infeasible(), std::to_string(c.chi - 1) + "-coloring search: " + outcome_name(v.outcome));
    }

    if (info->has_list_claim) {
        if (!check(c.lists.has_value(), "infeasibility claim present"))
            return r;
        const ListAssignment& la = *c.lists;
        bool shape_ok = la.mode == ListMode::admissible && la.vertex_count() == static_cast<std::size_t>(target.order()) &&
                        static_cast<int>(la.universe.size()) == c.chi + 1;
        const std::set<int> uni(la.universe.begin(), la.universe.end());
        for (const auto& l : la.lists) {
            shape_ok = shape_ok && static_cast<int>(l.size()) == c.chi;
            for (int col : l)
                shape_ok = shape_ok && uni.contains(col);
        }
        check(shape_ok, "lists are " + std::to_string(c.chi) + "-subsets of a " + std::to_string(c.chi + 1) +
                            "-color universe");
        if (la.vertex_count() == static_cast<std::size_t>(target.order())) {
            Verdict v = list_colorable(target, la, opts);
            std::string what = "list re-solve: " + outcome_name(v.outcome) + " (" + std::to_string(v.nodes) + " nodes)";
            if (v.feasible() && v.witness) {
                what += "; coloring found:";
                for (int u = 0; u < std::min(target.order(), 6); ++u)
                    what += " " + target.label(u).str() + "=" + std::to_string(v.witness->of(u));
                what += target.order() > 6 ? " ..." : "";
            }
            check(v.infeasible(), what);
        }
    } else {
        check(!c.lists.has_value(), "no infeasibility claim for " + c.theorem_id);
    }
    r.ok = r.failures.empty();
    return r;
}

VerificationReport verify_certificate(const json& j, const SolveOptions& opts) {
    try {
        return verify_certificate(certificate_from_json(j), opts);
    } catch (const SchemaError& e) {
        VerificationReport r;
        r.failures.push_back(std::string("schema: ") + e.what());
        return r;
    }
}

} // namespace sqlab
