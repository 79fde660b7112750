#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codegraph/java/ast.hpp"
#include "codegraph/taxonomy.hpp"

namespace codegraph::graph {

using java::NodeId;

inline constexpr std::size_t kEdgeTypeCount = 11;
inline constexpr std::size_t kFeatureLength = kNodeTypeCount + kEdgeTypeCount;  // 83

enum class EdgeType : std::uint8_t {
    ast,
    next_token,
    next_sibling,
    next_use,
    if_flow,
    else_flow,
    while_exec,
    while_next,
    for_exec,
    for_next,
    next_stmt,
};

std::string_view name_of(EdgeType t) noexcept;
/// Throws std::invalid_argument for unknown names.
EdgeType edge_type_from_name(std::string_view name);
constexpr std::size_t ordinal(EdgeType t) noexcept { return static_cast<std::size_t>(t); }

enum class Variant : std::uint8_t { ast_only, relsc_h, relsc_m };

std::string_view name_of(Variant v) noexcept;
Variant variant_from_name(std::string_view name);

struct Edge {
    NodeId src = 0;
    NodeId dst = 0;
    EdgeType type = EdgeType::ast;
    /// 7*ordinal(src category) + ordinal(dst category); set only on relsc_m graphs.
    std::optional<std::uint8_t> relation;
    /// Reverse copy emitted by the relational lift.
    bool inverse = false;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct FeatureVector {
    NodeType type = NodeType::CompilationUnit;
    std::array<std::uint32_t, kEdgeTypeCount> edge_counts{};

    /// One-hot node type followed by the outgoing-edge counts.
    [[nodiscard]] std::array<std::uint32_t, kFeatureLength> dense() const noexcept;

    friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

struct GraphNode {
    NodeId id = 0;
    NodeType type = NodeType::CompilationUnit;
    FeatureVector feature;

    friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

struct ProgramGraph {
    std::string id;
    Variant variant = Variant::ast_only;
    std::vector<GraphNode> nodes;
    std::vector<Edge> edges;
    std::optional<double> target;
    std::string provenance;
    /// Non-fatal remarks from construction (e.g. loops with empty bodies).
    std::vector<std::string> notes;

    friend bool operator==(const ProgramGraph&, const ProgramGraph&) = default;
};

/// Throws std::logic_error when an edge endpoint is missing, an edge is a
/// self-loop, or an ast_only graph carries non-ast edges.
void validate(const ProgramGraph& g);

std::array<std::size_t, kEdgeTypeCount> edge_type_counts(const ProgramGraph& g);

}  // namespace codegraph::graph
