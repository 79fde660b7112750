#include "codegraph/graph/program_graph.hpp"

#include <stdexcept>

namespace codegraph::graph {
namespace {

constexpr std::array<std::string_view, kEdgeTypeCount> kEdgeNames{
    "ast",        "next_token", "next_sibling", "next_use", "if_flow",   "else_flow",
    "while_exec", "while_next", "for_exec",     "for_next", "next_stmt",
};
constexpr std::array<std::string_view, 3> kVariantNames{"ast_only", "relsc_h", "relsc_m"};

}  // namespace

std::string_view name_of(EdgeType t) noexcept { return kEdgeNames[ordinal(t)]; }

EdgeType edge_type_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kEdgeNames.size(); ++i) {
        if (kEdgeNames[i] == name) return static_cast<EdgeType>(i);
    }
    throw std::invalid_argument("unknown edge type '" + std::string(name) + "'");
}

std::string_view name_of(Variant v) noexcept { return kVariantNames[static_cast<std::size_t>(v)]; }

Variant variant_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kVariantNames.size(); ++i) {
        if (kVariantNames[i] == name) return static_cast<Variant>(i);
    }
    throw std::invalid_argument("unknown graph variant '" + std::string(name) + "'");
}

std::array<std::uint32_t, kFeatureLength> FeatureVector::dense() const noexcept {
    std::array<std::uint32_t, kFeatureLength> out{};
    out[ordinal(type)] = 1;
    for (std::size_t i = 0; i < kEdgeTypeCount; ++i) out[kNodeTypeCount + i] = edge_counts[i];
    return out;
}

void validate(const ProgramGraph& g) {
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        if (g.nodes[i].id != i) throw std::logic_error("node ids are not dense pre-order indices");
    }
    for (const Edge& e : g.edges) {
        if (e.src >= g.nodes.size() || e.dst >= g.nodes.size()) {
            throw std::logic_error("edge endpoint out of range: " + std::to_string(e.src) + "->" +
                                   std::to_string(e.dst));
        }
        if (e.src == e.dst) throw std::logic_error("self-loop on node " + std::to_string(e.src));
        if (g.variant == Variant::ast_only && e.type != EdgeType::ast) {
            throw std::logic_error("ast_only graph carries a " + std::string(name_of(e.type)) + " edge");
        }
        if (g.variant == Variant::relsc_m && !e.relation) throw std::logic_error("relsc_m edge without relation");
        if (g.variant != Variant::relsc_m && (e.relation || e.inverse)) {
            throw std::logic_error("relation annotation on a non-relational graph");
        }
    }
}

std::array<std::size_t, kEdgeTypeCount> edge_type_counts(const ProgramGraph& g) {
    std::array<std::size_t, kEdgeTypeCount> counts{};
    for (const Edge& e : g.edges) ++counts[ordinal(e.type)];
    return counts;
}

}  // namespace codegraph::graph
