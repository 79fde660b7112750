#include <string>
#include <string_view>

#include "codegraph/java/ast.hpp"
#include "codegraph/java/frontend.hpp"

namespace codegraph::java {

std::string strip_comments(std::string_view source, std::string_view path) {
    std::string out(source);
    std::size_t i = 0;
    std::uint32_t line = 1;
    const std::size_t n = out.size();

    auto blank = [&](std::size_t from, std::size_t to) {
        for (std::size_t k = from; k < to; ++k) {
            if (out[k] != '\n') out[k] = ' ';
        }
    };

    while (i < n) {
        const char c = out[i];
        if (c == '\n') {
            ++line;
            ++i;
        } else if (c == '"' && source.substr(i, 3) == "\"\"\"") {
            i += 3;
            while (i < n && source.substr(i, 3) != "\"\"\"") {
                if (out[i] == '\\') ++i;
                if (i < n && out[i] == '\n') ++line;
                ++i;
            }
            i = std::min(n, i + 3);
        } else if (c == '"' || c == '\'') {
            // A literal never spans lines; an unterminated one is left for the
            // lexer to report.
            ++i;
            while (i < n && out[i] != c && out[i] != '\n') {
                if (out[i] == '\\') ++i;
                ++i;
            }
            if (i < n && out[i] == c) ++i;
        } else if (c == '/' && i + 1 < n && out[i + 1] == '/') {
            const std::size_t start = i;
            while (i < n && out[i] != '\n') ++i;
            blank(start, i);
        } else if (c == '/' && i + 1 < n && out[i + 1] == '*') {
            const std::size_t start = i;
            const std::uint32_t open_line = line;
            i += 2;
            while (i + 1 < n && !(out[i] == '*' && out[i + 1] == '/')) {
                if (out[i] == '\n') ++line;
                ++i;
            }
            if (i + 1 >= n) throw ParseError(std::string(path), open_line, "unterminated block comment");
            i += 2;
            blank(start, i);
        } else {
            ++i;
        }
    }
    return out;
}

}  // namespace codegraph::java
