#include "codegraph/graph/builder.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace codegraph::graph {
namespace {

using java::AstNode;
using java::ChildRole;
using java::SourceUnit;

void push(ProgramGraph& g, NodeId src, NodeId dst, EdgeType type) {
    g.edges.push_back(Edge{src, dst, type, std::nullopt, false});
}

std::optional<NodeId> child_with_role(const SourceUnit& unit, const AstNode& n, ChildRole role) {
    for (NodeId c : n.children) {
        if (unit.nodes[c].role == role) return c;
    }
    return std::nullopt;
}

bool is_statement_list_role(ChildRole r) {
    return r == ChildRole::statement || r == ChildRole::try_block || r == ChildRole::finally_block;
}

// Last statement executed before control returns to the loop condition.
// Nothing for an empty block or an empty statement.
std::optional<NodeId> last_statement(const SourceUnit& unit, NodeId body) {
    const AstNode& b = unit.nodes[body];
    if (b.type == NodeType::BlockStatement) {
        for (auto it = b.children.rbegin(); it != b.children.rend(); ++it) {
            if (unit.nodes[*it].role == ChildRole::statement) return *it;
        }
        return std::nullopt;
    }
    if (b.type == NodeType::Statement) return std::nullopt;
    return body;
}

void loop_edges(const SourceUnit& unit, ProgramGraph& g, NodeId cond, std::optional<NodeId> body, EdgeType exec,
                EdgeType next, const AstNode& loop, std::string_view kind) {
    if (!body) return;
    push(g, cond, *body, exec);
    if (auto last = last_statement(unit, *body)) {
        push(g, *last, cond, next);
    } else {
        g.notes.push_back("line " + std::to_string(loop.line) + ": " + std::string(kind) +
                          " loop has an empty body; no " + std::string(name_of(next)) + " edge");
    }
}

bool is_method_scope(NodeType t) {
    return t == NodeType::MethodDeclaration || t == NodeType::ConstructorDeclaration;
}
bool is_type_scope(NodeType t) {
    return t == NodeType::ClassDeclaration || t == NodeType::InterfaceDeclaration ||
           t == NodeType::EnumDeclaration || t == NodeType::AnnotationDeclaration;
}

bool is_declaration_occurrence(const AstNode& n) {
    switch (n.type) {
        case NodeType::VariableDeclarator:
        case NodeType::FormalParameter:
        case NodeType::InferredFormalParameter:
        case NodeType::CatchClauseParameter:
        case NodeType::TryResource:
            return !n.name.empty() && n.name != "this";
        default:
            return false;
    }
}

std::string first_segment(const std::string& qualifier) {
    return qualifier.substr(0, qualifier.find('.'));
}

// The simple name a node mentions as a variable, if any.
std::optional<std::string> occurrence_name(const SourceUnit& unit, const AstNode& n) {
    if (is_declaration_occurrence(n)) return n.name;
    if (n.role == ChildRole::selector) return std::nullopt;
    if (n.type == NodeType::MemberReference) {
        if (n.parent) {
            const AstNode& p = unit.nodes[*n.parent];
            if (p.type == NodeType::MethodReference && p.children.back() == n.id) return std::nullopt;
        }
        return n.qualifier.empty() ? n.name : first_segment(n.qualifier);
    }
    if (n.type == NodeType::MethodInvocation && !n.qualifier.empty()) return first_segment(n.qualifier);
    return std::nullopt;
}

}  // namespace

ProgramGraph orient_ast(const SourceUnit& unit) {
    ProgramGraph g;
    g.variant = Variant::ast_only;
    g.provenance = unit.path;
    g.nodes.reserve(unit.nodes.size());
    for (const AstNode& n : unit.nodes) g.nodes.push_back(GraphNode{n.id, n.type, FeatureVector{n.type, {}}});
    for (const AstNode& n : unit.nodes) {
        for (NodeId c : n.children) push(g, n.id, c, EdgeType::ast);
    }
    return g;
}

void add_next_token(const SourceUnit& unit, ProgramGraph& g) {
    std::vector<const AstNode*> leaves;
    for (const AstNode& n : unit.nodes) {
        if (n.is_leaf()) leaves.push_back(&n);
    }
    std::sort(leaves.begin(), leaves.end(), [](const AstNode* a, const AstNode* b) {
        return std::tie(a->source_order, a->id) < std::tie(b->source_order, b->id);
    });
    for (std::size_t i = 1; i < leaves.size(); ++i) push(g, leaves[i - 1]->id, leaves[i]->id, EdgeType::next_token);
}

void add_next_sibling(const SourceUnit& unit, ProgramGraph& g) {
    for (const AstNode& n : unit.nodes) {
        for (std::size_t i = 1; i < n.children.size(); ++i) {
            push(g, n.children[i - 1], n.children[i], EdgeType::next_sibling);
        }
    }
}

void add_next_use(const SourceUnit& unit, ProgramGraph& g) {
    // Scope = nearest enclosing method/constructor, else nearest type, else the root.
    std::vector<NodeId> scope(unit.nodes.size(), unit.root);
    for (const AstNode& n : unit.nodes) {
        if (!n.parent) continue;
        scope[n.id] = (is_method_scope(n.type) || is_type_scope(n.type)) ? n.id : scope[*n.parent];
    }
    // Only names declared as variables inside the scope form chains; class
    // names and fields used through a qualifier are left alone.
    using Key = std::pair<NodeId, std::string>;
    std::map<Key, std::vector<NodeId>> occurrences;
    std::map<Key, bool> declared;
    for (const AstNode& n : unit.nodes) {
        auto name = occurrence_name(unit, n);
        if (!name || name->empty()) continue;
        Key key{scope[n.id], *name};
        occurrences[key].push_back(n.id);
        if (is_declaration_occurrence(n)) declared[key] = true;
    }
    for (auto& [key, ids] : occurrences) {
        if (!declared.count(key)) continue;
        std::sort(ids.begin(), ids.end(), [&](NodeId a, NodeId b) {
            return std::tie(unit.nodes[a].source_order, a) < std::tie(unit.nodes[b].source_order, b);
        });
        for (std::size_t i = 1; i < ids.size(); ++i) push(g, ids[i - 1], ids[i], EdgeType::next_use);
    }
}

void add_control_flow(const SourceUnit& unit, ProgramGraph& g) {
    for (const AstNode& n : unit.nodes) {
        switch (n.type) {
            case NodeType::IfStatement: {
                auto cond = child_with_role(unit, n, ChildRole::condition);
                if (!cond) break;
                if (auto then = child_with_role(unit, n, ChildRole::then_branch)) push(g, *cond, *then, EdgeType::if_flow);
                if (auto els = child_with_role(unit, n, ChildRole::else_branch)) push(g, *cond, *els, EdgeType::else_flow);
                break;
            }
            case NodeType::WhileStatement: {
                auto cond = child_with_role(unit, n, ChildRole::condition);
                if (!cond) break;
                loop_edges(unit, g, *cond, child_with_role(unit, n, ChildRole::body), EdgeType::while_exec,
                           EdgeType::while_next, n, "while");
                break;
            }
            case NodeType::ForStatement: {
                auto control = child_with_role(unit, n, ChildRole::control);
                if (!control) break;
                NodeId cond = *control;
                if (unit.nodes[*control].type == NodeType::ForControl) {
                    cond = child_with_role(unit, unit.nodes[*control], ChildRole::condition).value_or(*control);
                }
                loop_edges(unit, g, cond, child_with_role(unit, n, ChildRole::body), EdgeType::for_exec,
                           EdgeType::for_next, n, "for");
                break;
            }
            default:
                break;
        }
        for (std::size_t i = 1; i < n.children.size(); ++i) {
            const ChildRole a = unit.nodes[n.children[i - 1]].role;
            const ChildRole b = unit.nodes[n.children[i]].role;
            if (a == b && is_statement_list_role(a)) push(g, n.children[i - 1], n.children[i], EdgeType::next_stmt);
        }
    }
}

void compute_features(ProgramGraph& g) {
    for (GraphNode& n : g.nodes) n.feature = FeatureVector{n.type, {}};
    for (const Edge& e : g.edges) ++g.nodes[e.src].feature.edge_counts[ordinal(e.type)];
}

void canonicalize_edges(ProgramGraph& g) {
    std::sort(g.edges.begin(), g.edges.end(), [](const Edge& a, const Edge& b) {
        return std::tuple(a.type, a.src, a.dst, a.relation, a.inverse) <
               std::tuple(b.type, b.src, b.dst, b.relation, b.inverse);
    });
}

ProgramGraph build_ast_only(const SourceUnit& unit) {
    ProgramGraph g = orient_ast(unit);
    compute_features(g);
    return g;
}

ProgramGraph build_relsc_h(const SourceUnit& unit) {
    ProgramGraph g = orient_ast(unit);
    g.variant = Variant::relsc_h;
    add_next_token(unit, g);
    add_next_sibling(unit, g);
    add_next_use(unit, g);
    add_control_flow(unit, g);
    canonicalize_edges(g);
    compute_features(g);
    return g;
}

}  // namespace codegraph::graph
