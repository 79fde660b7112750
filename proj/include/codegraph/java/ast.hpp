#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "codegraph/taxonomy.hpp"

namespace codegraph::java {

using NodeId = std::uint32_t;

/// Position a node occupies inside its parent. Only the distinctions the
/// flow-edge passes need are kept; everything else is `other`.
enum class ChildRole : std::uint8_t {
    root,
    other,
    condition,
    then_branch,
    else_branch,
    body,
    control,
    init,
    update,
    iterable,
    variable,
    statement,      // element of a block / method body / case statement list
    try_block,
    finally_block,
    selector,       // `.member`, `.call()` or `[index]` applied to a primary
};

std::string_view name_of(ChildRole role) noexcept;

struct AstNode {
    NodeId id = 0;
    NodeType type = NodeType::CompilationUnit;
    std::vector<NodeId> children;
    std::optional<NodeId> parent;
    /// Index of the node's first token in the file's token stream.
    std::uint32_t source_order = 0;
    std::uint32_t line = 0;
    ChildRole role = ChildRole::root;
    /// Declared or referenced simple name, literal text, or operator.
    std::string name;
    /// Dotted prefix of member references and invocations (`a.b` in `a.b.c`).
    std::string qualifier;

    [[nodiscard]] bool is_leaf() const noexcept { return children.empty(); }
};

/// One parsed compilation unit. Node ids are pre-order indices into `nodes`,
/// so `nodes[0]` is the root.
struct SourceUnit {
    std::string path;
    NodeId root = 0;
    std::vector<AstNode> nodes;
    std::vector<std::string> parse_warnings;

    [[nodiscard]] std::size_t node_count() const noexcept { return nodes.size(); }
    [[nodiscard]] const AstNode& node(NodeId id) const { return nodes.at(id); }
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::string path, std::uint32_t line, std::string message);

    [[nodiscard]] const std::string& path() const noexcept { return path_; }
    [[nodiscard]] std::uint32_t line() const noexcept { return line_; }
    [[nodiscard]] const std::string& message() const noexcept { return message_; }

private:
    std::string path_;
    std::uint32_t line_;
    std::string message_;
};

/// Raised for syntactically valid Java that has no counterpart in the
/// 72-type taxonomy (records, switch expressions, ...).
class UnsupportedConstruct : public ParseError {
public:
    UnsupportedConstruct(std::string path, std::uint32_t line, std::string construct);

    [[nodiscard]] const std::string& construct() const noexcept { return construct_; }

private:
    std::string construct_;
};

}  // namespace codegraph::java
