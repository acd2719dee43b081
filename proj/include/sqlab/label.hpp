#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sqlab {

/// What a vertex stands for in the construction it came from.
enum class Role : std::uint8_t {
    w,           ///< generic vertex (complete graphs, random graphs)
    x,
    y,
    z,
    u,
    v,
    x_prime,     ///< printed as x'
    y_prime,     ///< printed as y'
    part,        ///< complete multipartite vertex: part index, position
    chain,       ///< inner vertex of a P_{n,k} chain
    subdivision, ///< vertex inserted on an edge; carries both endpoint labels
    line,        ///< line-graph vertex; carries both endpoint labels
};

/// Structured vertex name.
///
/// Atomic labels are a role plus integer indices ("x[3]", "p[2,1]").
/// Composite labels (subdivision, line) carry the labels of the two ends of
/// the originating edge, so a vertex of L(S(G)) can be traced back to the
/// branch vertex and edge of G it came from. For composite labels `indices`
/// holds the parallel-edge copy number when it is nonzero.
///
/// Canonical text form: `x[3]`, `x`, `sub(w[1],w[2])`,
/// `line(w[1],sub(w[1],w[2]))`, `line(c[1],c[2])#1`.
struct VertexLabel {
    Role role = Role::w;
    std::vector<int> indices;
    std::vector<VertexLabel> ends;

    VertexLabel() = default;
    VertexLabel(Role r, std::vector<int> idx) : role(r), indices(std::move(idx)) {}

    static VertexLabel atom(Role r, std::vector<int> idx = {}) { return {r, std::move(idx)}; }
    static VertexLabel composite(Role r, VertexLabel a, VertexLabel b, int copy = 0);

    [[nodiscard]] bool is_composite() const { return !ends.empty(); }
    [[nodiscard]] int copy() const;
    [[nodiscard]] int index(std::size_t i = 0) const { return indices.at(i); }

    [[nodiscard]] std::string str() const;
    static VertexLabel parse(std::string_view text);

    friend bool operator==(const VertexLabel& a, const VertexLabel& b);
    friend bool operator<(const VertexLabel& a, const VertexLabel& b);
    friend bool operator!=(const VertexLabel& a, const VertexLabel& b) { return !(a == b); }
};

std::string_view role_name(Role r);

} // namespace sqlab
