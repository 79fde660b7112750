#include "codegraph/java/frontend.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace codegraph::java {

ParseError::ParseError(std::string path, std::uint32_t line, std::string message)
    : std::runtime_error(path + ":" + std::to_string(line) + ": " + message),
      path_(std::move(path)),
      line_(line),
      message_(std::move(message)) {}

UnsupportedConstruct::UnsupportedConstruct(std::string path, std::uint32_t line, std::string construct)
    : ParseError(std::move(path), line, "unsupported construct: " + construct), construct_(std::move(construct)) {}

std::string_view name_of(ChildRole role) noexcept {
    static constexpr std::array<std::string_view, 15> names{
        "root",     "other",    "condition", "then_branch", "else_branch",   "body",     "control", "init",
        "update",   "iterable", "variable",  "statement",   "try_block",     "finally_block", "selector"};
    const auto i = static_cast<std::size_t>(role);
    return i < names.size() ? names[i] : std::string_view("?");
}

SourceUnit parse_java_file_text(std::string_view source, std::string path) {
    std::string stripped = strip_comments(source, path);
    return parse_java(stripped, std::move(path));
}

SourceUnit parse_java_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, 0, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_java_file_text(buf.str(), path);
}

bool is_interface_only(const SourceUnit& unit) {
    if (unit.nodes.empty()) return false;
    bool any = false;
    for (NodeId child : unit.nodes[unit.root].children) {
        const NodeType t = unit.nodes[child].type;
        if (t == NodeType::InterfaceDeclaration || t == NodeType::AnnotationDeclaration) {
            any = true;
        } else if (t == NodeType::ClassDeclaration || t == NodeType::EnumDeclaration ||
                   t == NodeType::MethodDeclaration || t == NodeType::ConstructorDeclaration ||
                   t == NodeType::FieldDeclaration || t == NodeType::BlockStatement) {
            return false;
        }
    }
    return any;
}

nlohmann::ordered_json ast_to_json(const SourceUnit& unit) {
    nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
    for (const AstNode& n : unit.nodes) {
        nlohmann::ordered_json j;
        j["id"] = n.id;
        j["type"] = name_of(n.type);
        j["category"] = name_of(categorize(n.type));
        j["parent"] = n.parent ? nlohmann::ordered_json(*n.parent) : nlohmann::ordered_json(nullptr);
        j["children"] = n.children;
        j["source_order"] = n.source_order;
        j["line"] = n.line;
        j["role"] = name_of(n.role);
        if (!n.name.empty()) j["name"] = n.name;
        if (!n.qualifier.empty()) j["qualifier"] = n.qualifier;
        nodes.push_back(std::move(j));
    }
    nlohmann::ordered_json out;
    out["path"] = unit.path;
    out["warnings"] = unit.parse_warnings;
    out["nodes"] = std::move(nodes);
    return out;
}

}  // namespace codegraph::java
