#pragma once

#include "codegraph/graph/program_graph.hpp"
#include "codegraph/java/ast.hpp"

namespace codegraph::graph {

// The augmentation passes read the AST they were built from; they only ever
// append edges of their own types, so any order gives the same edge multiset.

ProgramGraph orient_ast(const java::SourceUnit& unit);

void add_next_token(const java::SourceUnit& unit, ProgramGraph& g);
void add_next_sibling(const java::SourceUnit& unit, ProgramGraph& g);
void add_next_use(const java::SourceUnit& unit, ProgramGraph& g);
/// if_flow, else_flow, while_exec, while_next, for_exec, for_next, next_stmt.
void add_control_flow(const java::SourceUnit& unit, ProgramGraph& g);

/// Recomputes every node's feature from the current edge list.
void compute_features(ProgramGraph& g);

/// Sorts edges by (type, src, dst, relation, inverse).
void canonicalize_edges(ProgramGraph& g);

/// AST edges only, features computed.
ProgramGraph build_ast_only(const java::SourceUnit& unit);

/// All passes, canonical edge order, features computed.
ProgramGraph build_relsc_h(const java::SourceUnit& unit);

}  // namespace codegraph::graph
