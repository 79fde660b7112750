#include <set>

#include <gtest/gtest.h>

#include "codegraph/relational/relational.hpp"
#include "edge_corpus.hpp"
#include "support.hpp"

using namespace codegraph;
using namespace codegraph::graph;
using namespace codegraph::relational;
using namespace testing_support;

namespace {

ProgramGraph tiny(std::vector<NodeType> types, std::vector<std::pair<NodeId, NodeId>> edges) {
    ProgramGraph g;
    g.variant = Variant::relsc_h;
    for (NodeId i = 0; i < types.size(); ++i) g.nodes.push_back(GraphNode{i, types[i], {}});
    for (auto [s, d] : edges) g.edges.push_back(Edge{s, d, EdgeType::ast, {}, false});
    compute_features(g);
    return g;
}

}  // namespace

TEST(Relational, RelationIdLayout) {
    EXPECT_EQ(kRelationCount, 49u);
    std::set<int> seen;
    for (std::size_t a = 0; a < kCategoryCount; ++a) {
        for (std::size_t b = 0; b < kCategoryCount; ++b) {
            const auto ca = static_cast<Category>(a);
            const auto cb = static_cast<Category>(b);
            const auto id = relation_id(ca, cb);
            EXPECT_EQ(id, 7 * a + b);
            EXPECT_EQ(relation_categories(id), std::make_pair(ca, cb));
            seen.insert(id);
        }
    }
    EXPECT_EQ(seen.size(), 49u);
    EXPECT_THROW(relation_categories(49), std::out_of_range);
}

TEST(Relational, MethodToIfIsDeclarationsControlFlow) {
    const auto h = tiny({NodeType::MethodDeclaration, NodeType::IfStatement}, {{0, 1}});
    const auto m = build_relsc_m(h, false);
    ASSERT_EQ(m.edges.size(), 1u);
    EXPECT_EQ(m.edges[0].relation, relation_id(Category::declarations, Category::control_flow));
    EXPECT_FALSE(m.edges[0].inverse);
}

TEST(Relational, InverseDoublesEdges) {
    const auto h = tiny({NodeType::MethodDeclaration, NodeType::IfStatement, NodeType::Literal}, {{0, 1}, {1, 2}});
    const auto m = build_relsc_m(h, true);
    ASSERT_EQ(m.edges.size(), 4u);
    EXPECT_EQ(m.variant, Variant::relsc_m);
    for (std::size_t i = 0; i < m.edges.size(); i += 2) {
        const auto& fwd = m.edges[i];
        const auto& inv = m.edges[i + 1];
        EXPECT_FALSE(fwd.inverse);
        EXPECT_TRUE(inv.inverse);
        EXPECT_EQ(fwd.src, inv.dst);
        EXPECT_EQ(fwd.dst, inv.src);
        EXPECT_EQ(fwd.type, inv.type);
        const auto [a, b] = relation_categories(*fwd.relation);
        EXPECT_EQ(inv.relation, relation_id(b, a));
    }
    EXPECT_NO_THROW(validate(m));
}

TEST(Relational, WrongVariantRejected) {
    auto g = tiny({NodeType::MethodDeclaration}, {});
    g.variant = Variant::ast_only;
    EXPECT_THROW(build_relsc_m(g), std::invalid_argument);
    EXPECT_THROW(relation_histogram(g), std::invalid_argument);
    g.variant = Variant::relsc_h;
    EXPECT_THROW(relation_histogram(g), std::invalid_argument);
    EXPECT_THROW(build_relsc_m(build_relsc_m(g)), std::invalid_argument);
}

TEST(Relational, HistogramCounting) {
    const auto empty = build_relsc_m(tiny({NodeType::Literal}, {}));
    EXPECT_EQ(relation_histogram(empty), RelationMatrix{});

    const auto h = tiny({NodeType::MethodDeclaration, NodeType::IfStatement, NodeType::WhileStatement,
                         NodeType::BinaryOperation, NodeType::Assignment},
                        {{0, 1}, {0, 2}, {3, 4}});
    const auto hist = relation_histogram(build_relsc_m(h, false));
    const auto decl = ordinal(Category::declarations);
    const auto ctrl = ordinal(Category::control_flow);
    const auto ops = ordinal(Category::expressions_and_operations);
    EXPECT_EQ(hist[decl][ctrl], 2u);
    EXPECT_EQ(hist[ops][ops], 1u);
    std::uint64_t total = 0;
    for (const auto& row : hist) {
        for (auto v : row) total += v;
    }
    EXPECT_EQ(total, 3u);
}

TEST(Relational, LiftPreservesNodesAndCountsOverCorpus) {
    for (const auto& body : kEdgeCorpus) {
        const auto h = build_relsc_h(parse_body(body));
        for (bool inverse : {true, false}) {
            const auto m = build_relsc_m(h, inverse);
            EXPECT_EQ(m.nodes, h.nodes) << body;
            EXPECT_EQ(m.edges.size(), (inverse ? 2 : 1) * h.edges.size()) << body;
            std::set<int> rels;
            for (const auto& e : m.edges) {
                ASSERT_TRUE(e.relation.has_value());
                rels.insert(*e.relation);
                EXPECT_EQ(*e.relation, relation_id(categorize(m.nodes[e.src].type), categorize(m.nodes[e.dst].type)));
            }
            EXPECT_LE(rels.size(), 49u);

            // Marginals: row sums are out-degree per source category, column sums in-degree per target category.
            const auto hist = relation_histogram(m);
            std::array<std::uint64_t, kCategoryCount> out{}, in{}, rows{}, cols{};
            for (const auto& e : m.edges) {
                ++out[ordinal(categorize(m.nodes[e.src].type))];
                ++in[ordinal(categorize(m.nodes[e.dst].type))];
            }
            for (std::size_t a = 0; a < kCategoryCount; ++a) {
                for (std::size_t b = 0; b < kCategoryCount; ++b) {
                    rows[a] += hist[a][b];
                    cols[b] += hist[a][b];
                }
            }
            EXPECT_EQ(rows, out) << body;
            EXPECT_EQ(cols, in) << body;
        }
    }
}
