#include "sqlab/io.hpp"

#include "sqlab/errors.hpp"

#include <fstream>
#include <sstream>

namespace sqlab {

namespace {

void check_version(const json& j) {
    if (!j.is_object())
        throw SchemaError("expected a JSON object");
    if (!j.contains("schema_version") || !j["schema_version"].is_number_integer())
        throw SchemaError("missing schema_version");
    if (j["schema_version"].get<int>() != kSchemaVersion)
        throw SchemaError("unsupported schema_version " + j["schema_version"].dump());
}

template <class T>
T field(const json& j, const char* key) {
    if (!j.contains(key))
        throw SchemaError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw SchemaError(std::string("bad field '") + key + "': " + e.what());
    }
}

int vertex_of(const Graph& g, const std::string& text) {
    VertexLabel l;
    try {
        l = VertexLabel::parse(text);
    } catch (const std::exception& e) {
        throw SchemaError("bad vertex label '" + text + "': " + e.what());
    }
    auto v = g.find(l);
    if (!v)
        throw SchemaError("unknown vertex label '" + text + "'");
    return *v;
}

} // namespace

json graph_to_json(const Graph& g) {
    json labels = json::array();
    for (const auto& l : g.labels())
        labels.push_back(l.str());
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back({e.u, e.v});
    return {{"schema_version", kSchemaVersion},
            {"labels", labels},
            {"edges", edges},
            {"simple", g.is_simple()},
            {"tags", g.tags()}};
}

Graph graph_from_json(const json& j) {
    check_version(j);
    std::vector<VertexLabel> labels;
    for (const auto& s : field<std::vector<std::string>>(j, "labels")) {
        try {
            labels.push_back(VertexLabel::parse(s));
        } catch (const std::exception& e) {
            throw SchemaError("bad vertex label '" + s + "': " + e.what());
        }
    }
    auto edges = field<std::vector<std::pair<int, int>>>(j, "edges");
    std::vector<std::string> tags;
    if (j.contains("tags"))
        tags = field<std::vector<std::string>>(j, "tags");
    Graph g;
    try {
        g = Graph::from_indices(std::move(labels), std::move(edges), std::move(tags));
    } catch (const GraphError& e) {
        throw SchemaError(std::string("invalid graph: ") + e.what());
    }
    if (j.contains("simple") && field<bool>(j, "simple") != g.is_simple())
        throw SchemaError("'simple' flag contradicts the edge list");
    return g;
}

json lists_to_json(const Graph& g, const ListAssignment& lists) {
    if (lists.vertex_count() != static_cast<std::size_t>(g.order()))
        throw ParameterError("list assignment does not match graph order");
    json per = json::object();
    for (int v = 0; v < g.order(); ++v)
        per[g.label(v).str()] = lists.lists[static_cast<std::size_t>(v)];
    return {{"schema_version", kSchemaVersion},
            {"universe", lists.universe},
            {"mode", lists.mode == ListMode::admissible ? "admissible" : "forbidden"},
            {"lists", per}};
}

ListAssignment lists_from_json(const Graph& g, const json& j) {
    if (!j.is_object())
        throw SchemaError("expected a JSON object");
    if (j.contains("schema_version"))
        check_version(j);
    ListAssignment la;
    la.universe = field<std::vector<int>>(j, "universe");
    const std::string mode = j.contains("mode") ? field<std::string>(j, "mode") : "admissible";
    if (mode == "admissible")
        la.mode = ListMode::admissible;
    else if (mode == "forbidden")
        la.mode = ListMode::forbidden;
    else
        throw SchemaError("unknown list mode '" + mode + "'");
    const json& per = j.contains("lists") ? j["lists"] : json();
    if (!per.is_object())
        throw SchemaError("'lists' must be an object keyed by vertex label");
    la.lists.assign(static_cast<std::size_t>(g.order()), {});
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (auto it = per.begin(); it != per.end(); ++it) {
        const int v = vertex_of(g, it.key());
        try {
            la.lists[static_cast<std::size_t>(v)] = it.value().get<std::vector<int>>();
        } catch (const json::exception& e) {
            throw SchemaError("bad list for '" + it.key() + "': " + e.what());
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (int v = 0; v < g.order(); ++v)
        if (!seen[static_cast<std::size_t>(v)]) {
            // admissible default: the whole universe; forbidden: nothing
            if (la.mode == ListMode::admissible)
                la.lists[static_cast<std::size_t>(v)] = la.universe;
        }
    try {
        la.normalize();
    } catch (const ParameterError& e) {
        throw SchemaError(e.what());
    }
    return la;
}

json coloring_to_json(const Graph& g, const Coloring& c) {
    json j = json::object();
    for (int v = 0; v < g.order(); ++v)
        j[g.label(v).str()] = c.of(v);
    return j;
}

Coloring coloring_from_json(const Graph& g, const json& j) {
    if (!j.is_object())
        throw SchemaError("coloring must be an object keyed by vertex label");
    Coloring c;
    c.color.assign(static_cast<std::size_t>(g.order()), 0);
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (auto it = j.begin(); it != j.end(); ++it) {
        const int v = vertex_of(g, it.key());
        if (!it.value().is_number_integer())
            throw SchemaError("color of '" + it.key() + "' is not an integer");
        c.color[static_cast<std::size_t>(v)] = it.value().get<int>();
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (int v = 0; v < g.order(); ++v)
        if (!seen[static_cast<std::size_t>(v)])
            throw SchemaError("coloring misses vertex " + g.label(v).str());
    return c;
}

json verdict_to_json(const Graph& g, const Verdict& v) {
    return {{"feasible", v.feasible()},
            {"outcome", outcome_name(v.outcome)},
            {"witness", v.witness ? coloring_to_json(g, *v.witness) : json()},
            {"nodes", v.nodes},
            {"millis", v.elapsed.count()},
            {"budget_hit", v.budget_hit()}};
}

json orientation_to_json(const Orientation& d) {
    json arcs = json::array();
    for (auto [t, h] : d.arcs())
        arcs.push_back({d.base().label(t).str(), d.base().label(h).str()});
    return {{"schema_version", kSchemaVersion}, {"arcs", arcs}};
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SchemaError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParameterError("cannot write " + path);
    out << text;
}

void write_dimacs(std::ostream& os, const Graph& g) {
    os << "p edge " << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges())
        os << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

json dimacs_sidecar(const Graph& g) {
    json labels = json::array();
    for (const auto& l : g.labels())
        labels.push_back(l.str());
    return {{"schema_version", kSchemaVersion}, {"labels", labels}};
}

Graph read_dimacs(std::istream& is, const std::optional<json>& sidecar) {
    std::string line;
    int n = -1;
    long long m = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c")
            continue;
        if (tag == "p") {
            std::string kind;
            if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "col") || n < 0 || m < 0)
                throw SchemaError("line " + std::to_string(lineno) + ": bad problem line");
        } else if (tag == "e") {
            int u = 0, v = 0;
            if (n < 0 || !(ls >> u >> v))
                throw SchemaError("line " + std::to_string(lineno) + ": bad edge line");
            if (u < 1 || v < 1 || u > n || v > n)
                throw SchemaError("line " + std::to_string(lineno) + ": endpoint out of range");
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw SchemaError("line " + std::to_string(lineno) + ": unknown record '" + tag + "'");
        }
    }
    if (n < 0)
        throw SchemaError("missing problem line");
    if (static_cast<long long>(edges.size()) != m)
        throw SchemaError("edge count does not match problem line");
    std::vector<VertexLabel> labels;
    if (sidecar) {
        check_version(*sidecar);
        for (const auto& s : field<std::vector<std::string>>(*sidecar, "labels"))
            labels.push_back(VertexLabel::parse(s));
        if (static_cast<int>(labels.size()) != n)
            throw SchemaError("sidecar label count does not match the graph");
    } else {
        for (int i = 1; i <= n; ++i)
            labels.push_back(VertexLabel::atom(Role::v, {i}));
    }
    try {
        return Graph::from_indices(std::move(labels), std::move(edges));
    } catch (const GraphError& e) {
        throw SchemaError(std::string("invalid graph: ") + e.what());
    }
}

std::string to_dot(const Graph& g, const Coloring* c) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) {
        os << "  n" << v << " [label=\"" << g.label(v).str();
        if (c)
            os << "\\n" << c->of(v) << "\", colorscheme=set19, style=filled, fillcolor=" << (c->of(v) % 9 + 1);
        else
            os << '"';
        os << "];\n";
    }
    for (const Edge& e : g.edges())
        os << "  n" << e.u << " -- n" << e.v << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace sqlab
