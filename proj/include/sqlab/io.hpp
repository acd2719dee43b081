#pragma once

#include "sqlab/coloring.hpp"
#include "sqlab/graph.hpp"
#include "sqlab/orientation.hpp"
#include "sqlab/solver.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>

namespace sqlab {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Every *_from_json throws SchemaError on malformed input.

/// {schema_version, labels: [str], edges: [[u, v]], simple, tags}
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

/// {schema_version, universe, mode, lists: {label: [colors]}}
json lists_to_json(const Graph& g, const ListAssignment& lists);
ListAssignment lists_from_json(const Graph& g, const json& j);

/// {label: color}
json coloring_to_json(const Graph& g, const Coloring& c);
Coloring coloring_from_json(const Graph& g, const json& j);

/// {feasible, outcome, witness, nodes, millis, budget_hit}
json verdict_to_json(const Graph& g, const Verdict& v);

/// {schema_version, arcs: [[tail label, head label]]}
json orientation_to_json(const Orientation& d);

/// Two-space indented dump with a trailing newline; objects have sorted
/// keys, so equal values give identical bytes.
std::string canonical_dump(const json& j);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// "p edge n m" then "e u v" lines, 1-based.
void write_dimacs(std::ostream& os, const Graph& g);
/// Labels default to v[1..n] when no sidecar {schema_version, labels} is
/// given. Comment lines ("c ...") are skipped.
Graph read_dimacs(std::istream& is, const std::optional<json>& sidecar = std::nullopt);
json dimacs_sidecar(const Graph& g);

/// GraphViz rendering with optional colors as node attributes.
std::string to_dot(const Graph& g, const Coloring* c = nullptr);

} // namespace sqlab
