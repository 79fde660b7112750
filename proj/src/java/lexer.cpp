#include "codegraph/java/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "codegraph/java/ast.hpp"

namespace codegraph::java {
namespace {

constexpr std::array<std::string_view, 53> kKeywords{
    "abstract", "assert",     "boolean",   "break",      "byte",      "case",       "catch",
    "char",     "class",      "const",     "continue",   "default",   "do",         "double",
    "else",     "enum",       "extends",   "final",      "finally",   "float",      "for",
    "goto",     "if",         "implements", "import",    "instanceof", "int",       "interface",
    "long",     "native",     "new",       "package",    "private",   "protected",  "public",
    "return",   "short",      "static",    "strictfp",   "super",     "switch",     "synchronized",
    "this",     "throw",      "throws",    "transient",  "try",       "void",       "volatile",
    "while",    "true",       "false",     "null",
};

// Longest first within each leading character; `>` is deliberately absent.
constexpr std::array<std::string_view, 20> kMultiCharOps{
    "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=",
    "<=",  "+=",  "-=", "*=", "/=", "&=", "|=", "^=", "%=", "<<",
};

constexpr std::string_view kSingleCharOps = "(){}[];,.@=<>!~?:+-*/&|^%";

bool is_ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80; }
bool is_ident_part(unsigned char c) { return is_ident_start(c) || std::isdigit(c); }

class Lexer {
public:
    Lexer(std::string_view src, std::string_view path) : src_(src), path_(path) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        bool joined = false;
        while (true) {
            joined = !skip_trivia() && !out.empty();
            if (pos_ >= src_.size()) break;
            Token tok = next();
            tok.joined = joined;
            out.push_back(std::move(tok));
        }
        out.push_back(Token{TokenKind::eof, "", line_, false});
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(std::string(path_), line_, msg); }

    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    // Returns true when any whitespace or comment was consumed.
    bool skip_trivia() {
        const std::size_t start = pos_;
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\f') {
                ++pos_;
            } else if (c == '/' && peek(1) == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
            } else if (c == '/' && peek(1) == '*') {
                const std::uint32_t open_line = line_;
                pos_ += 2;
                while (pos_ < src_.size() && !(src_[pos_] == '*' && peek(1) == '/')) {
                    if (src_[pos_] == '\n') ++line_;
                    ++pos_;
                }
                if (pos_ >= src_.size()) {
                    line_ = open_line;
                    fail("unterminated block comment");
                }
                pos_ += 2;
            } else {
                break;
            }
        }
        return pos_ != start;
    }

    Token next() {
        const unsigned char c = static_cast<unsigned char>(src_[pos_]);
        if (is_ident_start(c)) return word();
        if (std::isdigit(c) || (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) return number();
        if (c == '"') return string_literal();
        if (c == '\'') return char_literal();
        return op();
    }

    Token word() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && is_ident_part(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        std::string text(src_.substr(start, pos_ - start));
        TokenKind kind = TokenKind::identifier;
        if (text == "true" || text == "false" || text == "null") {
            kind = TokenKind::literal;
        } else if (is_java_keyword(text)) {
            kind = TokenKind::keyword;
        }
        return Token{kind, std::move(text), line_, false};
    }

    void digits(bool hex) {
        while (pos_ < src_.size()) {
            const unsigned char d = static_cast<unsigned char>(src_[pos_]);
            if (std::isdigit(d) || d == '_' || (hex && std::isxdigit(d))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    Token number() {
        const std::size_t start = pos_;
        const char next = static_cast<char>(std::tolower(static_cast<unsigned char>(peek(1))));
        if (peek() == '0' && (next == 'x' || next == 'b')) {
            pos_ += 2;
            digits(next == 'x');
            if (next == 'x' && peek() == '.') {
                ++pos_;
                digits(true);
            }
            if (next == 'x' && (peek() == 'p' || peek() == 'P')) {
                ++pos_;
                if (peek() == '+' || peek() == '-') ++pos_;
                digits(false);
            }
        } else {
            digits(false);
            if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
                ++pos_;
                digits(false);
            } else if (peek() == '.' && !is_ident_start(static_cast<unsigned char>(peek(1))) && peek(1) != '.') {
                ++pos_;  // `1.` is a valid double literal
            }
            if (peek() == 'e' || peek() == 'E') {
                ++pos_;
                if (peek() == '+' || peek() == '-') ++pos_;
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed exponent in numeric literal");
                digits(false);
            }
        }
        if (std::string_view("lLfFdD").find(peek()) != std::string_view::npos && peek() != '\0') ++pos_;
        if (pos_ < src_.size() && is_ident_part(static_cast<unsigned char>(src_[pos_]))) {
            fail("malformed numeric literal '" + std::string(src_.substr(start, pos_ - start + 1)) + "'");
        }
        return Token{TokenKind::literal, std::string(src_.substr(start, pos_ - start)), line_, false};
    }

    Token string_literal() {
        const std::size_t start = pos_;
        const std::uint32_t line = line_;
        if (src_.substr(pos_, 3) == "\"\"\"") {
            pos_ += 3;
            while (pos_ < src_.size() && src_.substr(pos_, 3) != "\"\"\"") {
                if (src_[pos_] == '\\') ++pos_;
                if (pos_ < src_.size() && src_[pos_] == '\n') ++line_;
                ++pos_;
            }
            if (pos_ >= src_.size()) fail("unterminated text block");
            pos_ += 3;
            return Token{TokenKind::literal, std::string(src_.substr(start, pos_ - start)), line, false};
        }
        ++pos_;
        while (pos_ < src_.size() && src_[pos_] != '"') {
            if (src_[pos_] == '\n') fail("unterminated string literal");
            if (src_[pos_] == '\\') ++pos_;
            ++pos_;
        }
        if (pos_ >= src_.size()) fail("unterminated string literal");
        ++pos_;
        return Token{TokenKind::literal, std::string(src_.substr(start, pos_ - start)), line, false};
    }

    Token char_literal() {
        const std::size_t start = pos_;
        ++pos_;
        while (pos_ < src_.size() && src_[pos_] != '\'') {
            if (src_[pos_] == '\n') fail("unterminated character literal");
            if (src_[pos_] == '\\') ++pos_;
            ++pos_;
        }
        if (pos_ >= src_.size()) fail("unterminated character literal");
        ++pos_;
        return Token{TokenKind::literal, std::string(src_.substr(start, pos_ - start)), line_, false};
    }

    Token op() {
        for (std::string_view candidate : kMultiCharOps) {
            if (src_.substr(pos_, candidate.size()) == candidate) {
                pos_ += candidate.size();
                return Token{TokenKind::op, std::string(candidate), line_, false};
            }
        }
        if (kSingleCharOps.find(src_[pos_]) == std::string_view::npos) {
            fail(std::string("unexpected character '") + src_[pos_] + "'");
        }
        return Token{TokenKind::op, std::string(1, src_[pos_++]), line_, false};
    }

    std::string_view src_;
    std::string_view path_;
    std::size_t pos_ = 0;
    std::uint32_t line_ = 1;
};

}  // namespace

bool is_java_keyword(std::string_view word) noexcept {
    return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<Token> tokenize(std::string_view source, std::string_view path) {
    return Lexer(source, path).run();
}

}  // namespace codegraph::java
