#include "codegraph/relational/relational.hpp"

#include <stdexcept>
#include <string>

namespace codegraph::relational {

std::pair<Category, Category> relation_categories(std::uint8_t id) {
    if (id >= kRelationCount) throw std::out_of_range("relation id " + std::to_string(id) + " out of range");
    return {static_cast<Category>(id / kCategoryCount), static_cast<Category>(id % kCategoryCount)};
}

graph::ProgramGraph build_relsc_m(const graph::ProgramGraph& h, bool add_inverse) {
    if (h.variant != graph::Variant::relsc_h) {
        throw std::invalid_argument("relational lift expects a relsc_h graph, got " +
                                    std::string(graph::name_of(h.variant)));
    }
    graph::ProgramGraph m = h;
    m.variant = graph::Variant::relsc_m;
    m.edges.clear();
    m.edges.reserve(h.edges.size() * (add_inverse ? 2 : 1));
    for (const graph::Edge& e : h.edges) {
        const Category src = categorize(h.nodes[e.src].type);
        const Category dst = categorize(h.nodes[e.dst].type);
        m.edges.push_back(graph::Edge{e.src, e.dst, e.type, relation_id(src, dst), false});
        if (add_inverse) m.edges.push_back(graph::Edge{e.dst, e.src, e.type, relation_id(dst, src), true});
    }
    return m;
}

RelationMatrix relation_histogram(const graph::ProgramGraph& g) {
    if (g.variant != graph::Variant::relsc_m) {
        throw std::invalid_argument("relation histogram needs a relsc_m graph, got " +
                                    std::string(graph::name_of(g.variant)));
    }
    RelationMatrix cells{};
    for (const graph::Edge& e : g.edges) {
        const auto [src, dst] = relation_categories(*e.relation);
        ++cells[ordinal(src)][ordinal(dst)];
    }
    return cells;
}

}  // namespace codegraph::relational
