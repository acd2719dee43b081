#pragma once

#include "sqlab/coloring.hpp"
#include "sqlab/families.hpp"
#include "sqlab/io.hpp"
#include "sqlab/solver.hpp"
#include "sqlab/structure.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sqlab {

/// Named integer parameters of a theorem (n, k, ...).
using TheoremParams = std::map<std::string, int>;

struct TheoremInfo {
    std::string id;
    std::string provenance;
    TheoremParams defaults;
    bool has_list_claim = true;
};

/// Registered theorem ids in table order.
const std::vector<TheoremInfo>& theorem_registry();
const TheoremInfo& theorem_info(const std::string& id);

struct Certificate {
    int schema_version = kSchemaVersion;
    std::string theorem_id;
    std::string provenance;
    TheoremParams params;
    FamilyDescriptor family;
    std::vector<std::string> transform_chain;
    StructureReport base_structure;
    StructureReport structure; ///< of the transformed graph
    std::optional<std::vector<int>> multipartite_parts;
    int chi = 0;
    Coloring chi_witness;
    std::string witness_rule; ///< "explicit" or "solver"
    std::optional<ListAssignment> lists; ///< admissible lists claimed infeasible
    std::vector<std::string> notes;
    std::uint64_t chi_nodes = 0;
    std::uint64_t list_nodes = 0;
    long long list_millis = 0;
    std::string graph_digest;
};

/// SHA-256 (hex) of the canonical JSON serialization of g.
std::string graph_digest(const Graph& g);

/// Builds the family, applies the transform chain, computes chi with a
/// witness and runs the infeasibility solve. Throws VerdictMismatch when any
/// result contradicts the theorem, BudgetExceeded when a solve runs out,
/// ParameterError for unknown ids or parameters.
Certificate make_certificate(const std::string& theorem_id, const TheoremParams& params = {},
                             const SolveOptions& opts = {});

/// Graph described by a certificate, rebuilt from family and transforms.
Graph rebuild_graph(const Certificate& c);

json certificate_to_json(const Certificate& c);
/// Throws SchemaError. Lists and witness are resolved against the rebuilt
/// graph, so the family must be buildable.
Certificate certificate_from_json(const json& j);

struct VerificationReport {
    bool ok = false;
    std::vector<std::string> failures;
    std::vector<std::string> checks; ///< passed checks, for display
    [[nodiscard]] std::string describe() const;
};

/// Re-derives everything from scratch: digest, witness validity and color
/// count, chi lower bound, list shapes, and a fresh infeasibility solve.
VerificationReport verify_certificate(const Certificate& c, const SolveOptions& opts = {});
/// Same, starting from JSON; schema problems are reported as failures.
VerificationReport verify_certificate(const json& j, const SolveOptions& opts = {});

} // namespace sqlab
