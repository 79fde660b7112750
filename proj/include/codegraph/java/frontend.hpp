#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "codegraph/java/ast.hpp"
#include "codegraph/java/lexer.hpp"

namespace codegraph::java {

/// Blanks out `//` and `/* */` comments. Every removed character becomes a
/// space except newlines, so the result has the same length and line layout.
/// String, char and text-block literals are left alone.
///
/// Throws ParseError on an unterminated block comment.
std::string strip_comments(std::string_view source, std::string_view path = "<input>");

/// Parses one compilation unit. The text is expected to be comment free
/// (comments are tolerated by the lexer but never produce nodes).
///
/// Bare member declarations at file level (a method snippet with no
/// enclosing class) are accepted and hang directly off the CompilationUnit;
/// a warning is recorded when that happens.
SourceUnit parse_java(std::string_view source, std::string path = "<input>");

/// strip_comments followed by parse_java.
SourceUnit parse_java_file_text(std::string_view source, std::string path);

/// Reads, strips and parses a file from disk.
SourceUnit parse_java_file(const std::string& path);

/// True when every top-level type declaration is an interface or an
/// annotation type (and there is at least one).
bool is_interface_only(const SourceUnit& unit);

/// Debug dump: {"path", "nodes": [{"id","type","children","source_order",...}]}.
nlohmann::ordered_json ast_to_json(const SourceUnit& unit);

}  // namespace codegraph::java
