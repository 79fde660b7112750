#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace codegraph::java {

enum class TokenKind : std::uint8_t {
    identifier,
    keyword,
    literal,
    op,     // operators and separators; `>` is always emitted on its own
    eof,
};

struct Token {
    TokenKind kind = TokenKind::eof;
    std::string text;
    std::uint32_t line = 0;
    /// No whitespace between this token and the previous one. Used to glue
    /// `>` `>` back into shift operators outside of type arguments.
    bool joined = false;
};

bool is_java_keyword(std::string_view word) noexcept;

/// Splits Java source into tokens; the last token is always `eof`.
/// Comments are skipped. Throws ParseError on malformed literals.
std::vector<Token> tokenize(std::string_view source, std::string_view path = "<input>");

}  // namespace codegraph::java
