// Recursive-descent Java parser producing the canonical node-type tree.
//
// The tree shape follows the javalang conventions the taxonomy was taken
// from: identifiers, operators and punctuation are attributes rather than
// nodes, qualified type names become chains of ReferenceType nodes, method
// bodies hang their statements directly off the declaration, and all
// modifier keywords of one declaration collapse into a single Modifier node.
// Children are ordered by source position.

#include <algorithm>
#include <array>
#include <memory>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "codegraph/java/ast.hpp"
#include "codegraph/java/frontend.hpp"
#include "codegraph/java/lexer.hpp"

namespace codegraph::java {
namespace {

struct PNode {
    NodeType type;
    std::uint32_t first_token;
    std::uint32_t line;
    ChildRole role = ChildRole::other;
    std::string name;
    std::string qualifier;
    std::vector<std::unique_ptr<PNode>> children;
};
using PNodePtr = std::unique_ptr<PNode>;

constexpr std::array<std::string_view, 8> kPrimitives{"boolean", "byte", "char", "short",
                                                      "int",     "long", "float", "double"};
constexpr std::array<std::string_view, 12> kModifierWords{
    "public", "protected", "private",      "static",    "abstract", "final",
    "native", "synchronized", "transient", "volatile", "strictfp", "default"};
constexpr std::array<std::string_view, 11> kAssignOps{"=",  "+=", "-=", "*=", "/=",  "&=",
                                                      "|=", "^=", "%=", "<<=", ">>="};

enum class BodyKind { top_level, class_body, interface_body, annotation_body };

struct Modifiers {
    PNodePtr modifier;
    std::vector<PNodePtr> annotations;
    std::optional<std::uint32_t> first;
};

int binary_precedence(std::string_view op) {
    static constexpr std::array<std::pair<std::string_view, int>, 20> table{{
        {"||", 1}, {"&&", 2}, {"|", 3},   {"^", 4},  {"&", 5},  {"==", 6},  {"!=", 6},
        {"<", 7},  {">", 7},  {"<=", 7},  {">=", 7}, {"instanceof", 7},   {"<<", 8},
        {">>", 8}, {">>>", 8}, {"+", 9},  {"-", 9},  {"*", 10}, {"/", 10}, {"%", 10},
    }};
    for (const auto& [name, prec] : table) {
        if (name == op) return prec;
    }
    return 0;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, std::string path) : toks_(std::move(tokens)), path_(std::move(path)) {}

    SourceUnit run() {
        PNodePtr root = make(NodeType::CompilationUnit, 0);
        parse_compilation_unit(*root);
        return flatten(std::move(root));
    }

private:
    // ---- token helpers -------------------------------------------------

    const Token& look(std::size_t k = 0) const {
        const std::size_t i = std::min(pos_ + k, toks_.size() - 1);
        return toks_[i];
    }
    bool at(std::string_view text, std::size_t k = 0) const {
        const Token& t = look(k);
        return (t.kind == TokenKind::op || t.kind == TokenKind::keyword) && t.text == text;
    }
    bool at_word(std::string_view text, std::size_t k = 0) const {
        const Token& t = look(k);
        return t.kind == TokenKind::identifier && t.text == text;
    }
    bool at_ident(std::size_t k = 0) const { return look(k).kind == TokenKind::identifier; }
    bool at_eof() const { return look().kind == TokenKind::eof; }
    bool at_primitive(std::size_t k = 0) const {
        const Token& t = look(k);
        return t.kind == TokenKind::keyword &&
               std::find(kPrimitives.begin(), kPrimitives.end(), t.text) != kPrimitives.end();
    }
    bool accept(std::string_view text) {
        if (!at(text)) return false;
        ++pos_;
        return true;
    }
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(path_, look().line, message);
    }
    [[noreturn]] void unsupported(const std::string& construct) const {
        throw UnsupportedConstruct(path_, look().line, construct);
    }
    void expect(std::string_view text) {
        if (!accept(text)) {
            const Token& t = look();
            fail("expected '" + std::string(text) + "' but found " +
                 (t.kind == TokenKind::eof ? std::string("end of file") : "'" + t.text + "'"));
        }
    }
    std::string ident() {
        if (!at_ident()) {
            const Token& t = look();
            fail("expected identifier but found " +
                 (t.kind == TokenKind::eof ? std::string("end of file") : "'" + t.text + "'"));
        }
        return toks_[pos_++].text;
    }
    void warn(std::string message) {
        if (std::find(warnings_.begin(), warnings_.end(), message) == warnings_.end()) {
            warnings_.push_back(std::move(message));
        }
    }

    PNodePtr make(NodeType type, std::size_t token) const {
        auto n = std::make_unique<PNode>();
        n->type = type;
        n->first_token = static_cast<std::uint32_t>(token);
        n->line = toks_[std::min(token, toks_.size() - 1)].line;
        return n;
    }
    static void add(PNode& parent, PNodePtr child, ChildRole role = ChildRole::other) {
        if (!child) return;
        child->role = role;
        parent.children.push_back(std::move(child));
    }
    static void attach(PNode& decl, Modifiers&& mods) {
        add(decl, std::move(mods.modifier));
        for (auto& a : mods.annotations) add(decl, std::move(a));
    }

    std::string qualified_name() {
        std::string name = ident();
        while (at(".") && at_ident(1)) {
            ++pos_;
            name += "." + ident();
        }
        return name;
    }

    // ---- compilation unit and declarations -----------------------------

    void parse_compilation_unit(PNode& root) {
        if (at_word("module") || (at_word("open") && at_word("module", 1))) unsupported("module declaration");
        const std::size_t save = pos_;
        std::vector<PNodePtr> annotations;
        while (at("@") && !at("interface", 1)) annotations.push_back(parse_annotation());
        if (at("package")) {
            PNodePtr pkg = make(NodeType::PackageDeclaration, annotations.empty() ? pos_ : annotations.front()->first_token);
            for (auto& a : annotations) add(*pkg, std::move(a));
            ++pos_;
            pkg->name = qualified_name();
            expect(";");
            add(root, std::move(pkg));
        } else {
            pos_ = save;
        }
        while (at("import")) {
            PNodePtr imp = make(NodeType::Import, pos_);
            ++pos_;
            if (accept("static")) imp->qualifier = "static";
            imp->name = ident();
            while (accept(".")) {
                if (accept("*")) {
                    imp->name += ".*";
                    break;
                }
                imp->name += "." + ident();
            }
            expect(";");
            add(root, std::move(imp));
        }
        while (!at_eof()) {
            if (accept(";")) continue;
            add(root, parse_member(BodyKind::top_level));
        }
    }

    bool at_modifier_word() const {
        const Token& t = look();
        if (t.kind != TokenKind::keyword) return false;
        if (std::find(kModifierWords.begin(), kModifierWords.end(), t.text) == kModifierWords.end()) return false;
        if (t.text == "default" && (at(":", 1) || at("->", 1))) return false;
        if (t.text == "synchronized" && at("(", 1)) return false;
        return true;
    }

    Modifiers parse_modifiers() {
        Modifiers mods;
        while (true) {
            if (at("@") && !at("interface", 1)) {
                if (!mods.first) mods.first = static_cast<std::uint32_t>(pos_);
                mods.annotations.push_back(parse_annotation());
            } else if (at_modifier_word()) {
                if (!mods.first) mods.first = static_cast<std::uint32_t>(pos_);
                if (!mods.modifier) {
                    mods.modifier = make(NodeType::Modifier, pos_);
                } else {
                    mods.modifier->name += ' ';
                }
                mods.modifier->name += toks_[pos_++].text;
            } else if ((at_word("sealed") || at_word("non")) && (at_modifier_word_after_sealed())) {
                warn("sealed class modifiers ignored");
                if (at_word("non")) pos_ += 2;  // `non` `-`
                ++pos_;
            } else {
                return mods;
            }
        }
    }
    bool at_modifier_word_after_sealed() const {
        if (at_word("non")) return at("-", 1) && at_word("sealed", 2);
        return at("class", 1) || at("interface", 1) || at("abstract", 1) || at("public", 1) ||
               at("static", 1) || at("private", 1) || at("protected", 1);
    }

    PNodePtr parse_member(BodyKind kind) {
        if (at("{") || (at("static") && at("{", 1))) {
            PNodePtr block = make(NodeType::BlockStatement, pos_);
            if (at("static")) {
                PNodePtr mod = make(NodeType::Modifier, pos_);
                mod->name = "static";
                add(*block, std::move(mod));
                ++pos_;
            }
            for (auto& s : parse_block()) add(*block, std::move(s), ChildRole::statement);
            return block;
        }
        Modifiers mods = parse_modifiers();
        const std::size_t start = mods.first.value_or(pos_);
        if (at("class")) return parse_class(std::move(mods), start);
        if (at("interface")) return parse_interface(std::move(mods), start);
        if (at("enum")) return parse_enum(std::move(mods), start);
        if (at("@") && at("interface", 1)) return parse_annotation_declaration(std::move(mods), start);
        if (at_word("record") && at_ident(1) && (at("(", 2) || at("<", 2))) unsupported("record declaration");
        if (kind == BodyKind::top_level) {
            if (!at_ident() && !at_primitive() && !at("void") && !at("<")) {
                fail("expected a type declaration but found '" + look().text + "'");
            }
            warn("member declaration outside a type declaration");
        }

        std::vector<PNodePtr> type_params;
        if (at("<")) type_params = parse_type_parameters();

        if (at_ident() && at("(", 1)) {
            PNodePtr ctor = make(NodeType::ConstructorDeclaration, start);
            ctor->name = ident();
            attach(*ctor, std::move(mods));
            for (auto& tp : type_params) add(*ctor, std::move(tp));
            parse_method_rest(*ctor, false);
            return ctor;
        }

        PNodePtr return_type;
        std::string name;
        std::size_t name_token = 0;
        if (accept("void")) {
            name_token = pos_;
            name = ident();
        } else {
            return_type = parse_type();
            name_token = pos_;
            name = ident();
        }

        if (at("(")) {
            const bool annotation_method = kind == BodyKind::annotation_body;
            PNodePtr method = make(annotation_method ? NodeType::AnnotationMethod : NodeType::MethodDeclaration, start);
            method->name = name;
            attach(*method, std::move(mods));
            for (auto& tp : type_params) add(*method, std::move(tp));
            add(*method, std::move(return_type));
            parse_method_rest(*method, annotation_method);
            return method;
        }

        if (!return_type) fail("field declared with type void");
        const bool constant = kind == BodyKind::interface_body || kind == BodyKind::annotation_body;
        PNodePtr field = make(constant ? NodeType::ConstantDeclaration : NodeType::FieldDeclaration, start);
        attach(*field, std::move(mods));
        add(*field, std::move(return_type));
        add(*field, parse_variable_declarator_rest(name_token, std::move(name)));
        while (accept(",")) add(*field, parse_variable_declarator());
        expect(";");
        return field;
    }

    void parse_method_rest(PNode& method, bool annotation_method) {
        for (auto& p : parse_formal_parameters()) add(method, std::move(p));
        while (at("[") && at("]", 1)) pos_ += 2;
        if (accept("throws")) {
            qualified_name();
            while (accept(",")) qualified_name();
        }
        if (at("{")) {
            for (auto& s : parse_block()) add(method, std::move(s), ChildRole::statement);
        } else if (annotation_method && accept("default")) {
            add(method, parse_element_value());
            expect(";");
        } else {
            expect(";");
        }
    }

    void parse_class_body(PNode& owner, BodyKind kind) {
        expect("{");
        while (!accept("}")) {
            if (at_eof()) fail("unexpected end of file in type body");
            if (accept(";")) continue;
            add(owner, parse_member(kind));
        }
    }

    void skip_permits() {
        if (at_word("permits")) {
            warn("sealed class permits clause ignored");
            ++pos_;
            qualified_name();
            while (accept(",")) qualified_name();
        }
    }

    PNodePtr parse_class(Modifiers mods, std::size_t start) {
        PNodePtr cls = make(NodeType::ClassDeclaration, start);
        expect("class");
        cls->name = ident();
        attach(*cls, std::move(mods));
        if (at("<")) {
            for (auto& tp : parse_type_parameters()) add(*cls, std::move(tp));
        }
        if (accept("extends")) add(*cls, parse_type());
        if (accept("implements")) {
            add(*cls, parse_type());
            while (accept(",")) add(*cls, parse_type());
        }
        skip_permits();
        parse_class_body(*cls, BodyKind::class_body);
        return cls;
    }

    PNodePtr parse_interface(Modifiers mods, std::size_t start) {
        PNodePtr iface = make(NodeType::InterfaceDeclaration, start);
        expect("interface");
        iface->name = ident();
        attach(*iface, std::move(mods));
        if (at("<")) {
            for (auto& tp : parse_type_parameters()) add(*iface, std::move(tp));
        }
        if (accept("extends")) {
            add(*iface, parse_type());
            while (accept(",")) add(*iface, parse_type());
        }
        skip_permits();
        parse_class_body(*iface, BodyKind::interface_body);
        return iface;
    }

    PNodePtr parse_annotation_declaration(Modifiers mods, std::size_t start) {
        PNodePtr decl = make(NodeType::AnnotationDeclaration, start);
        expect("@");
        expect("interface");
        decl->name = ident();
        attach(*decl, std::move(mods));
        parse_class_body(*decl, BodyKind::annotation_body);
        return decl;
    }

    PNodePtr parse_enum(Modifiers mods, std::size_t start) {
        PNodePtr en = make(NodeType::EnumDeclaration, start);
        expect("enum");
        en->name = ident();
        attach(*en, std::move(mods));
        if (accept("implements")) {
            add(*en, parse_type());
            while (accept(",")) add(*en, parse_type());
        }
        PNodePtr body = make(NodeType::EnumBody, pos_);
        expect("{");
        while (!at(";") && !at("}")) {
            if (at_eof()) fail("unexpected end of file in enum body");
            Modifiers constant_mods = parse_modifiers();
            PNodePtr constant = make(NodeType::EnumConstantDeclaration, constant_mods.first.value_or(pos_));
            constant->name = ident();
            attach(*constant, std::move(constant_mods));
            if (at("(")) {
                for (auto& a : parse_arguments()) add(*constant, std::move(a));
            }
            if (at("{")) parse_class_body(*constant, BodyKind::class_body);
            add(*body, std::move(constant));
            if (!accept(",")) break;
        }
        if (accept(";")) {
            while (!at("}")) {
                if (at_eof()) fail("unexpected end of file in enum body");
                if (accept(";")) continue;
                add(*body, parse_member(BodyKind::class_body));
            }
        }
        expect("}");
        add(*en, std::move(body));
        return en;
    }

    std::vector<PNodePtr> parse_type_parameters() {
        std::vector<PNodePtr> out;
        expect("<");
        do {
            while (at("@")) {
                parse_annotation();
                warn("type annotations ignored");
            }
            PNodePtr tp = make(NodeType::TypeParameter, pos_);
            tp->name = ident();
            if (accept("extends")) {
                add(*tp, parse_type());
                while (accept("&")) add(*tp, parse_type());
            }
            out.push_back(std::move(tp));
        } while (accept(","));
        expect(">");
        return out;
    }

    std::vector<PNodePtr> parse_formal_parameters() {
        std::vector<PNodePtr> out;
        expect("(");
        while (!at(")")) {
            Modifiers mods = parse_modifiers();
            const std::size_t start = mods.first.value_or(pos_);
            PNodePtr type = parse_type();
            accept("...");
            PNodePtr param = make(NodeType::FormalParameter, start);
            if (at("this")) {
                ++pos_;
                param->name = "this";
            } else {
                param->name = ident();
            }
            while (at("[") && at("]", 1)) pos_ += 2;
            attach(*param, std::move(mods));
            add(*param, std::move(type));
            out.push_back(std::move(param));
            if (!accept(",")) break;
        }
        expect(")");
        return out;
    }

    PNodePtr parse_variable_declarator() {
        const std::size_t tok = pos_;
        std::string name = ident();
        return parse_variable_declarator_rest(tok, std::move(name));
    }

    PNodePtr parse_variable_declarator_rest(std::size_t name_token, std::string name) {
        PNodePtr decl = make(NodeType::VariableDeclarator, name_token);
        decl->name = std::move(name);
        while (at("[") && at("]", 1)) pos_ += 2;
        if (accept("=")) add(*decl, parse_variable_initializer());
        return decl;
    }

    PNodePtr parse_variable_initializer() {
        if (at("{")) return parse_array_initializer();
        return parse_expression();
    }

    PNodePtr parse_array_initializer() {
        PNodePtr init = make(NodeType::ArrayInitializer, pos_);
        expect("{");
        while (!at("}")) {
            add(*init, parse_variable_initializer());
            if (!accept(",")) break;
        }
        expect("}");
        return init;
    }

    // ---- annotations ---------------------------------------------------

    PNodePtr parse_annotation() {
        PNodePtr ann = make(NodeType::Annotation, pos_);
        expect("@");
        ann->name = qualified_name();
        if (accept("(")) {
            if (at_ident() && at("=", 1)) {
                do {
                    PNodePtr pair = make(NodeType::ElementValuePair, pos_);
                    pair->name = ident();
                    expect("=");
                    add(*pair, parse_element_value());
                    add(*ann, std::move(pair));
                } while (accept(","));
            } else if (!at(")")) {
                add(*ann, parse_element_value());
            }
            expect(")");
        }
        return ann;
    }

    PNodePtr parse_element_value() {
        if (at("@")) return parse_annotation();
        if (at("{")) {
            PNodePtr arr = make(NodeType::ElementArrayValue, pos_);
            ++pos_;
            while (!at("}")) {
                add(*arr, parse_element_value());
                if (!accept(",")) break;
            }
            expect("}");
            return arr;
        }
        return parse_expressionl();
    }

    // ---- types -----------------------------------------------------------

    void skip_type_annotations() {
        while (at("@") && !at("interface", 1)) {
            parse_annotation();
            warn("type annotations ignored");
        }
    }

    PNodePtr parse_type_base() {
        skip_type_annotations();
        if (at_primitive()) {
            PNodePtr basic = make(NodeType::BasicType, pos_);
            basic->name = toks_[pos_++].text;
            return basic;
        }
        PNodePtr head = make(NodeType::ReferenceType, pos_);
        head->name = ident();
        PNode* tail = head.get();
        while (true) {
            if (at("<")) {
                for (auto& a : parse_type_arguments()) add(*tail, std::move(a));
            }
            if (at(".") && (at_ident(1) || at("@", 1))) {
                ++pos_;
                skip_type_annotations();
                PNodePtr sub = make(NodeType::ReferenceType, pos_);
                sub->name = ident();
                PNode* next = sub.get();
                add(*tail, std::move(sub));
                tail = next;
            } else {
                break;
            }
        }
        return head;
    }

    PNodePtr parse_type() {
        PNodePtr type = parse_type_base();
        while (true) {
            skip_type_annotations();
            if (at("[") && at("]", 1)) {
                pos_ += 2;
            } else {
                break;
            }
        }
        return type;
    }

    std::vector<PNodePtr> parse_type_arguments() {
        std::vector<PNodePtr> out;
        expect("<");
        if (accept(">")) return out;  // diamond
        do {
            skip_type_annotations();
            PNodePtr arg = make(NodeType::TypeArgument, pos_);
            if (accept("?")) {
                arg->name = "?";
                if (at("extends") || at("super")) {
                    arg->qualifier = toks_[pos_++].text;
                    add(*arg, parse_type());
                }
            } else {
                add(*arg, parse_type());
            }
            out.push_back(std::move(arg));
        } while (accept(","));
        expect(">");
        return out;
    }

    // Speculatively parses a type and reports whether `pred` holds right
    // after it. Always restores the position.
    template <typename Pred>
    bool type_followed_by(Pred pred) {
        const std::size_t save = pos_;
        const std::size_t warn_count = warnings_.size();
        bool ok = false;
        try {
            parse_type();
            ok = pred();
        } catch (const ParseError&) {
            ok = false;
        }
        pos_ = save;
        warnings_.resize(warn_count);
        return ok;
    }

    bool looks_like_local_variable() {
        if (!at_ident() && !at_primitive()) return false;
        return type_followed_by([this] {
            return at_ident() && (at("=", 1) || at(";", 1) || at(",", 1) || at("[", 1) || at(":", 1));
        });
    }

    // ---- statements ------------------------------------------------------

    std::vector<PNodePtr> parse_block() {
        std::vector<PNodePtr> stmts;
        expect("{");
        while (!accept("}")) {
            if (at_eof()) fail("unexpected end of file in block");
            stmts.push_back(parse_block_statement());
        }
        return stmts;
    }

    PNodePtr parse_block_statement() {
        if (at_ident() && at(":", 1)) return parse_statement();
        if (at("final") || (at("@") && !at("interface", 1)) || at("abstract") || at("class") || at("interface") ||
            at("enum") || at("static") || at("strictfp")) {
            Modifiers mods = parse_modifiers();
            const std::size_t start = mods.first.value_or(pos_);
            if (at("class")) return parse_class(std::move(mods), start);
            if (at("interface")) return parse_interface(std::move(mods), start);
            if (at("enum")) return parse_enum(std::move(mods), start);
            if (at_word("record") && at_ident(1)) unsupported("record declaration");
            return parse_local_variable(std::move(mods), start);
        }
        if (at_word("record") && at_ident(1) && (at("(", 2) || at("<", 2))) unsupported("record declaration");
        if (at_word("yield") && !at("=", 1) && !at("(", 1) && !at(".", 1) && !at("[", 1) && !at("++", 1) &&
            !at("--", 1) && !at_ident(1)) {
            unsupported("yield statement");
        }
        if (looks_like_local_variable()) {
            Modifiers none;
            const std::size_t start = pos_;
            return parse_local_variable(std::move(none), start);
        }
        return parse_statement();
    }

    PNodePtr parse_local_variable(Modifiers mods, std::size_t start) {
        PNodePtr decl = make(NodeType::LocalVariableDeclaration, start);
        attach(*decl, std::move(mods));
        add(*decl, parse_type());
        do {
            add(*decl, parse_variable_declarator());
        } while (accept(","));
        expect(";");
        return decl;
    }

    PNodePtr parse_par_expression() {
        expect("(");
        PNodePtr e = parse_expression();
        expect(")");
        return e;
    }

    PNodePtr parse_statement() {
        const std::size_t tok = pos_;
        if (at("{")) {
            PNodePtr block = make(NodeType::BlockStatement, tok);
            for (auto& s : parse_block()) add(*block, std::move(s), ChildRole::statement);
            return block;
        }
        if (accept(";")) return make(NodeType::Statement, tok);
        if (at_ident() && at(":", 1)) {
            pos_ += 2;
            return parse_statement();
        }
        if (accept("if")) {
            PNodePtr s = make(NodeType::IfStatement, tok);
            add(*s, parse_par_expression(), ChildRole::condition);
            add(*s, parse_statement(), ChildRole::then_branch);
            if (accept("else")) add(*s, parse_statement(), ChildRole::else_branch);
            return s;
        }
        if (accept("while")) {
            PNodePtr s = make(NodeType::WhileStatement, tok);
            add(*s, parse_par_expression(), ChildRole::condition);
            add(*s, parse_statement(), ChildRole::body);
            return s;
        }
        if (accept("do")) {
            PNodePtr s = make(NodeType::DoStatement, tok);
            add(*s, parse_statement(), ChildRole::body);
            expect("while");
            add(*s, parse_par_expression(), ChildRole::condition);
            expect(";");
            return s;
        }
        if (at("for")) return parse_for();
        if (at("try")) return parse_try();
        if (at("switch")) return parse_switch();
        if (accept("assert")) {
            PNodePtr s = make(NodeType::AssertStatement, tok);
            add(*s, parse_expression());
            if (accept(":")) add(*s, parse_expression());
            expect(";");
            return s;
        }
        if (at("break") || at("continue")) {
            PNodePtr s = make(at("break") ? NodeType::BreakStatement : NodeType::ContinueStatement, tok);
            ++pos_;
            if (at_ident()) s->name = ident();
            expect(";");
            return s;
        }
        if (accept("return")) {
            PNodePtr s = make(NodeType::ReturnStatement, tok);
            if (!at(";")) add(*s, parse_expression());
            expect(";");
            return s;
        }
        if (accept("throw")) {
            PNodePtr s = make(NodeType::ThrowStatement, tok);
            add(*s, parse_expression());
            expect(";");
            return s;
        }
        if (at("synchronized") && at("(", 1)) {
            ++pos_;
            PNodePtr s = make(NodeType::SynchronizedStatement, tok);
            add(*s, parse_par_expression());
            for (auto& b : parse_block()) add(*s, std::move(b), ChildRole::statement);
            return s;
        }
        if (at("class") || at("interface") || at("enum")) return parse_block_statement();
        if (at("else")) fail("'else' without 'if'");
        if (at("case") || at("default")) fail("'" + look().text + "' outside of switch");

        PNodePtr s = make(NodeType::StatementExpression, tok);
        add(*s, parse_expression());
        expect(";");
        return s;
    }

    PNodePtr parse_for() {
        PNodePtr s = make(NodeType::ForStatement, pos_);
        expect("for");
        expect("(");
        const std::size_t ctl_start = pos_;

        // Enhanced for: [modifiers] Type name ':' expression
        bool enhanced = false;
        {
            const std::size_t save = pos_;
            const std::size_t warn_count = warnings_.size();
            try {
                parse_modifiers();
                parse_type();
                enhanced = at_ident() && at(":", 1);
            } catch (const ParseError&) {
                enhanced = false;
            }
            pos_ = save;
            warnings_.resize(warn_count);
        }

        PNodePtr control;
        if (enhanced) {
            control = make(NodeType::EnhancedForControl, ctl_start);
            Modifiers mods = parse_modifiers();
            PNodePtr var = make(NodeType::VariableDeclaration, ctl_start);
            attach(*var, std::move(mods));
            add(*var, parse_type());
            add(*var, parse_variable_declarator());
            add(*control, std::move(var), ChildRole::variable);
            expect(":");
            add(*control, parse_expression(), ChildRole::iterable);
        } else {
            control = make(NodeType::ForControl, ctl_start);
            if (!at(";")) {
                if (at("final") || at("@") || looks_like_local_variable()) {
                    Modifiers mods = parse_modifiers();
                    PNodePtr var = make(NodeType::VariableDeclaration, mods.first.value_or(pos_));
                    attach(*var, std::move(mods));
                    add(*var, parse_type());
                    do {
                        add(*var, parse_variable_declarator());
                    } while (accept(","));
                    add(*control, std::move(var), ChildRole::init);
                } else {
                    do {
                        add(*control, parse_expression(), ChildRole::init);
                    } while (accept(","));
                }
            }
            expect(";");
            if (!at(";")) add(*control, parse_expression(), ChildRole::condition);
            expect(";");
            if (!at(")")) {
                do {
                    add(*control, parse_expression(), ChildRole::update);
                } while (accept(","));
            }
        }
        expect(")");
        add(*s, std::move(control), ChildRole::control);
        add(*s, parse_statement(), ChildRole::body);
        return s;
    }

    PNodePtr parse_try() {
        PNodePtr s = make(NodeType::TryStatement, pos_);
        expect("try");
        bool has_resources = false;
        if (accept("(")) {
            while (!at(")")) {
                has_resources = true;
                Modifiers mods = parse_modifiers();
                PNodePtr res = make(NodeType::TryResource, mods.first.value_or(pos_));
                attach(*res, std::move(mods));
                if (type_followed_by([this] { return at_ident() && at("=", 1); })) {
                    add(*res, parse_type());
                    res->name = ident();
                    expect("=");
                    add(*res, parse_expression());
                } else {
                    warn("try-with-resources on an existing variable");
                    add(*res, parse_expression());
                }
                add(*s, std::move(res));
                if (!accept(";")) break;
            }
            expect(")");
        }
        for (auto& b : parse_block()) add(*s, std::move(b), ChildRole::try_block);
        bool has_handler = false;
        while (at("catch")) {
            has_handler = true;
            PNodePtr clause = make(NodeType::CatchClause, pos_);
            ++pos_;
            expect("(");
            parse_modifiers();
            PNodePtr param = make(NodeType::CatchClauseParameter, pos_);
            param->qualifier = qualified_name();
            while (accept("|")) param->qualifier += "|" + qualified_name();
            param->name = ident();
            expect(")");
            add(*clause, std::move(param));
            for (auto& b : parse_block()) add(*clause, std::move(b), ChildRole::statement);
            add(*s, std::move(clause));
        }
        if (accept("finally")) {
            has_handler = true;
            for (auto& b : parse_block()) add(*s, std::move(b), ChildRole::finally_block);
        }
        if (!has_handler && !has_resources) fail("'try' without 'catch' or 'finally'");
        return s;
    }

    PNodePtr parse_switch() {
        PNodePtr s = make(NodeType::SwitchStatement, pos_);
        expect("switch");
        add(*s, parse_par_expression());
        expect("{");
        while (!accept("}")) {
            if (at_eof()) fail("unexpected end of file in switch");
            PNodePtr c = make(NodeType::SwitchStatementCase, pos_);
            if (accept("default")) {
                c->name = "default";
            } else {
                expect("case");
                add(*c, parse_expressionl());
                while (accept(",")) {
                    warn("multiple case labels");
                    add(*c, parse_expressionl());
                }
            }
            if (accept("->")) {
                warn("switch rule (case ->)");
                if (at("{")) {
                    add(*c, parse_statement(), ChildRole::statement);
                } else if (at("throw")) {
                    add(*c, parse_statement(), ChildRole::statement);
                } else {
                    PNodePtr e = make(NodeType::StatementExpression, pos_);
                    add(*e, parse_expression());
                    expect(";");
                    add(*c, std::move(e), ChildRole::statement);
                }
            } else {
                expect(":");
                while (!at("case") && !at("default") && !at("}")) {
                    if (at_eof()) fail("unexpected end of file in switch");
                    add(*c, parse_block_statement(), ChildRole::statement);
                }
            }
            add(*s, std::move(c));
        }
        return s;
    }

    // ---- expressions -----------------------------------------------------

    std::optional<std::pair<std::string, std::size_t>> peek_assignment_op() const {
        const Token& t = look();
        if (t.kind != TokenKind::op) return std::nullopt;
        if (t.text == ">") {
            if (at(">", 1) && look(1).joined && at("=", 2) && look(2).joined) return std::pair{std::string(">>="), 3};
            if (at(">", 1) && look(1).joined && at(">", 2) && look(2).joined && at("=", 3) && look(3).joined) {
                return std::pair{std::string(">>>="), 4};
            }
            return std::nullopt;
        }
        if (std::find(kAssignOps.begin(), kAssignOps.end(), t.text) != kAssignOps.end()) {
            return std::pair{t.text, std::size_t{1}};
        }
        return std::nullopt;
    }

    std::optional<std::pair<std::string, std::size_t>> peek_binary_op() const {
        const Token& t = look();
        if (t.kind == TokenKind::keyword && t.text == "instanceof") return std::pair{t.text, std::size_t{1}};
        if (t.kind != TokenKind::op) return std::nullopt;
        if (t.text == ">") {
            const bool g1 = at(">", 1) && look(1).joined;
            const bool g2 = g1 && at(">", 2) && look(2).joined;
            if (g2) {
                if (at("=", 3) && look(3).joined) return std::nullopt;  // >>>=
                return std::pair{std::string(">>>"), 3};
            }
            if (g1) {
                if (at("=", 2) && look(2).joined) return std::nullopt;  // >>=
                return std::pair{std::string(">>"), 2};
            }
            if (at("=", 1) && look(1).joined && !at("=", 2)) return std::pair{std::string(">="), 2};
            return std::pair{std::string(">"), 1};
        }
        if (binary_precedence(t.text) > 0) return std::pair{t.text, std::size_t{1}};
        return std::nullopt;
    }

    PNodePtr parse_expression() {
        if (PNodePtr lambda = try_lambda()) return lambda;
        const std::size_t start = pos_;
        PNodePtr lhs = parse_expressionl();
        if (auto op = peek_assignment_op()) {
            pos_ += op->second;
            PNodePtr assign = make(NodeType::Assignment, start);
            assign->first_token = lhs->first_token;
            assign->name = op->first;
            add(*assign, std::move(lhs));
            add(*assign, parse_expression());
            return assign;
        }
        return lhs;
    }

    PNodePtr parse_expressionl() {
        PNodePtr cond = parse_expression_2();
        if (accept("?")) {
            PNodePtr t = make(NodeType::TernaryExpression, cond->first_token);
            add(*t, std::move(cond));
            add(*t, parse_expression());
            expect(":");
            PNodePtr if_false = try_lambda();
            add(*t, if_false ? std::move(if_false) : parse_expressionl());
            return t;
        }
        return cond;
    }

    PNodePtr parse_expression_2() {
        std::vector<PNodePtr> operands;
        std::vector<std::string> ops;
        operands.push_back(parse_expression_3());
        while (auto op = peek_binary_op()) {
            pos_ += op->second;
            if (op->first == "instanceof") {
                accept("final");
                operands.push_back(parse_type());
                if (at_ident()) {
                    warn("instanceof pattern binding");
                    ++pos_;
                }
            } else {
                operands.push_back(parse_expression_3());
            }
            ops.push_back(op->first);
        }
        if (ops.empty()) return std::move(operands.front());

        // Operator-precedence reduction, left associative.
        std::vector<PNodePtr> out_stack;
        std::vector<std::string> op_stack;
        auto reduce = [&] {
            PNodePtr rhs = std::move(out_stack.back());
            out_stack.pop_back();
            PNodePtr lhs = std::move(out_stack.back());
            out_stack.pop_back();
            PNodePtr bin = make(NodeType::BinaryOperation, lhs->first_token);
            bin->name = op_stack.back();
            op_stack.pop_back();
            add(*bin, std::move(lhs));
            add(*bin, std::move(rhs));
            out_stack.push_back(std::move(bin));
        };
        out_stack.push_back(std::move(operands[0]));
        for (std::size_t i = 0; i < ops.size(); ++i) {
            const int prec = binary_precedence(ops[i]);
            while (!op_stack.empty() && binary_precedence(op_stack.back()) >= prec) reduce();
            op_stack.push_back(ops[i]);
            out_stack.push_back(std::move(operands[i + 1]));
        }
        while (!op_stack.empty()) reduce();
        return std::move(out_stack.front());
    }

    bool at_prefix_op() const {
        return at("++") || at("--") || at("!") || at("~") || at("+") || at("-");
    }

    PNodePtr parse_expression_3() {
        while (at_prefix_op()) ++pos_;
        if (at("(")) {
            if (PNodePtr cast = try_cast()) return cast;
        }
        const std::size_t start = pos_;
        PNodePtr primary = parse_primary();
        while (at("[") || (at(".") && !at("..."))) add(*primary, parse_selector(), ChildRole::selector);
        while (at("++") || at("--")) ++pos_;
        if (accept("::")) {
            PNodePtr ref = make(NodeType::MethodReference, start);
            ref->first_token = primary->first_token;
            add(*ref, std::move(primary));
            if (at("<")) {
                for (auto& a : parse_type_arguments()) add(*ref, std::move(a));
            }
            PNodePtr method = make(NodeType::MemberReference, pos_);
            if (accept("new")) {
                method->name = "new";
            } else {
                method->name = ident();
            }
            add(*ref, std::move(method));
            return ref;
        }
        return primary;
    }

    bool can_start_cast_operand(std::size_t k) const {
        const Token& t = look(k);
        switch (t.kind) {
            case TokenKind::identifier:
            case TokenKind::literal:
                return true;
            case TokenKind::keyword:
                return t.text == "this" || t.text == "super" || t.text == "new" || t.text == "void" ||
                       t.text == "switch" || at_primitive(k);
            case TokenKind::op:
                return t.text == "(" || t.text == "!" || t.text == "~";
            case TokenKind::eof:
                return false;
        }
        return false;
    }

    PNodePtr try_cast() {
        const std::size_t save = pos_;
        const std::size_t warn_count = warnings_.size();
        ++pos_;  // (
        if (at_primitive()) {
            try {
                PNodePtr type = parse_type();
                if (accept(")")) {
                    PNodePtr cast = make(NodeType::Cast, save);
                    add(*cast, std::move(type));
                    add(*cast, parse_expression_3());
                    return cast;
                }
            } catch (const ParseError&) {
            }
            pos_ = save;
            warnings_.resize(warn_count);
            return nullptr;
        }
        if (!at_ident() && !at("@")) {
            pos_ = save;
            return nullptr;
        }
        std::vector<PNodePtr> types;
        try {
            types.push_back(parse_type());
            while (accept("&")) types.push_back(parse_type());
        } catch (const ParseError&) {
            pos_ = save;
            warnings_.resize(warn_count);
            return nullptr;
        }
        if (!at(")") || !can_start_cast_operand(1)) {
            pos_ = save;
            warnings_.resize(warn_count);
            return nullptr;
        }
        ++pos_;  // )
        PNodePtr cast = make(NodeType::Cast, save);
        for (auto& t : types) add(*cast, std::move(t));
        PNodePtr operand = try_lambda();
        add(*cast, operand ? std::move(operand) : parse_expression_3());
        return cast;
    }

    std::optional<std::size_t> matching_paren(std::size_t open) const {
        int depth = 0;
        for (std::size_t i = open; i < toks_.size(); ++i) {
            const Token& t = toks_[i];
            if (t.kind != TokenKind::op) continue;
            if (t.text == "(") ++depth;
            if (t.text == ")" && --depth == 0) return i;
        }
        return std::nullopt;
    }

    PNodePtr try_lambda() {
        const std::size_t start = pos_;
        PNodePtr lambda;
        if (at_ident() && at("->", 1)) {
            lambda = make(NodeType::LambdaExpression, start);
            PNodePtr p = make(NodeType::InferredFormalParameter, pos_);
            p->name = ident();
            add(*lambda, std::move(p));
        } else if (at("(")) {
            auto close = matching_paren(pos_);
            if (!close || !(toks_[*close + 1].kind == TokenKind::op && toks_[*close + 1].text == "->")) return nullptr;
            lambda = make(NodeType::LambdaExpression, start);
            bool inferred = true;
            for (std::size_t i = pos_ + 1; i < *close; ++i) {
                const bool expect_ident = ((i - pos_ - 1) % 2) == 0;
                const Token& t = toks_[i];
                if (expect_ident ? t.kind != TokenKind::identifier : !(t.kind == TokenKind::op && t.text == ",")) {
                    inferred = false;
                    break;
                }
            }
            if (inferred) {
                ++pos_;
                while (!at(")")) {
                    PNodePtr p = make(NodeType::InferredFormalParameter, pos_);
                    p->name = ident();
                    add(*lambda, std::move(p));
                    if (!accept(",")) break;
                }
                expect(")");
            } else {
                for (auto& p : parse_formal_parameters()) add(*lambda, std::move(p));
            }
        } else {
            return nullptr;
        }
        expect("->");
        if (at("{")) {
            for (auto& s : parse_block()) add(*lambda, std::move(s), ChildRole::statement);
        } else {
            add(*lambda, parse_expression(), ChildRole::body);
        }
        return lambda;
    }

    std::vector<PNodePtr> parse_arguments() {
        std::vector<PNodePtr> args;
        expect("(");
        while (!at(")")) {
            args.push_back(parse_expression());
            if (!accept(",")) break;
        }
        expect(")");
        return args;
    }

    PNodePtr parse_literal() {
        PNodePtr lit = make(NodeType::Literal, pos_);
        lit->name = toks_[pos_++].text;
        if (lit->name.starts_with("\"\"\"")) warn("text block literal");
        return lit;
    }

    PNodePtr parse_primary() {
        const std::size_t t = pos_;
        const Token& tok = look();
        if (tok.kind == TokenKind::literal) return parse_literal();
        if (accept("(")) {
            PNodePtr e = parse_expression();
            expect(")");
            return e;
        }
        if (accept("this")) {
            if (at("(")) {
                PNodePtr inv = make(NodeType::ExplicitConstructorInvocation, t);
                for (auto& a : parse_arguments()) add(*inv, std::move(a));
                return inv;
            }
            return make(NodeType::This, t);
        }
        if (accept("super")) return parse_super_suffix(t, "");
        if (at("new")) return parse_creator(t);
        if (at("<")) {
            std::vector<PNodePtr> targs = parse_type_arguments();
            if (at("this") || at("super")) {
                const bool is_this = at("this");
                ++pos_;
                PNodePtr inv = make(is_this ? NodeType::ExplicitConstructorInvocation : NodeType::SuperConstructorInvocation, t);
                for (auto& a : targs) add(*inv, std::move(a));
                for (auto& a : parse_arguments()) add(*inv, std::move(a));
                return inv;
            }
            PNodePtr inv = make(NodeType::MethodInvocation, t);
            for (auto& a : targs) add(*inv, std::move(a));
            inv->name = ident();
            for (auto& a : parse_arguments()) add(*inv, std::move(a));
            return inv;
        }
        if (at_primitive()) {
            PNodePtr type = parse_type();
            if (at("::")) return type;
            expect(".");
            expect("class");
            PNodePtr ref = make(NodeType::ClassReference, t);
            add(*ref, std::move(type));
            return ref;
        }
        if (accept("void")) {
            expect(".");
            expect("class");
            return make(NodeType::VoidClassReference, t);
        }
        if (at("switch")) unsupported("switch expression");
        if (at_ident()) return parse_identifier_primary();
        fail(tok.kind == TokenKind::eof ? std::string("unexpected end of file in expression")
                                        : "unexpected '" + tok.text + "' in expression");
    }

    PNodePtr parse_super_suffix(std::size_t t, std::string qualifier) {
        if (at("(")) {
            PNodePtr inv = make(NodeType::SuperConstructorInvocation, t);
            inv->qualifier = std::move(qualifier);
            for (auto& a : parse_arguments()) add(*inv, std::move(a));
            return inv;
        }
        if (at("::")) {
            PNodePtr ref = make(NodeType::SuperMemberReference, t);
            ref->qualifier = std::move(qualifier);
            return ref;
        }
        expect(".");
        std::vector<PNodePtr> targs;
        if (at("<")) targs = parse_type_arguments();
        const std::size_t name_tok = pos_;
        std::string member = ident();
        if (at("(")) {
            PNodePtr inv = make(NodeType::SuperMethodInvocation, t);
            inv->name = std::move(member);
            inv->qualifier = std::move(qualifier);
            for (auto& a : targs) add(*inv, std::move(a));
            for (auto& a : parse_arguments()) add(*inv, std::move(a));
            return inv;
        }
        (void)name_tok;
        PNodePtr ref = make(NodeType::SuperMemberReference, t);
        ref->name = std::move(member);
        ref->qualifier = std::move(qualifier);
        return ref;
    }

    PNodePtr parse_identifier_primary() {
        const std::size_t t = pos_;
        // Generic or array type used as a method-reference target: List<String>::new, int[]::new.
        if ((at("<", 1) || (at("[", 1) && at("]", 2))) && type_followed_by([this] { return at("::"); })) {
            return parse_type();
        }
        std::vector<std::string> names{ident()};
        std::size_t last_tok = t;
        while (at(".") && at_ident(1)) {
            ++pos_;
            last_tok = pos_;
            names.push_back(ident());
        }
        auto join = [](const std::vector<std::string>& parts, std::size_t count) {
            std::string out;
            for (std::size_t i = 0; i < count; ++i) {
                if (i) out += '.';
                out += parts[i];
            }
            return out;
        };

        if (at("[") && at("]", 1)) {
            while (at("[") && at("]", 1)) pos_ += 2;
            expect(".");
            expect("class");
            PNodePtr ref = make(NodeType::ClassReference, t);
            ref->qualifier = join(names, names.size() - 1);
            PNodePtr type = make(NodeType::ReferenceType, last_tok);
            type->name = names.back();
            add(*ref, std::move(type));
            return ref;
        }
        if (at("(")) {
            PNodePtr inv = make(NodeType::MethodInvocation, t);
            inv->name = names.back();
            inv->qualifier = join(names, names.size() - 1);
            for (auto& a : parse_arguments()) add(*inv, std::move(a));
            return inv;
        }
        if (at(".") && at("class", 1)) {
            pos_ += 2;
            PNodePtr ref = make(NodeType::ClassReference, t);
            ref->qualifier = join(names, names.size() - 1);
            PNodePtr type = make(NodeType::ReferenceType, last_tok);
            type->name = names.back();
            add(*ref, std::move(type));
            return ref;
        }
        if (at(".") && at("this", 1)) {
            pos_ += 2;
            PNodePtr self = make(NodeType::This, t);
            self->qualifier = join(names, names.size());
            return self;
        }
        if (at(".") && at("<", 1)) {
            ++pos_;
            PNodePtr inv = make(NodeType::MethodInvocation, t);
            for (auto& a : parse_type_arguments()) add(*inv, std::move(a));
            inv->qualifier = join(names, names.size());
            inv->name = ident();
            for (auto& a : parse_arguments()) add(*inv, std::move(a));
            return inv;
        }
        if (at(".") && at("new", 1)) {
            ++pos_;
            PNodePtr creator = parse_inner_creator(t);
            creator->qualifier = join(names, names.size());
            return creator;
        }
        if (at(".") && at("super", 1)) {
            pos_ += 2;
            return parse_super_suffix(t, join(names, names.size()));
        }
        PNodePtr ref = make(NodeType::MemberReference, t);
        ref->name = names.back();
        ref->qualifier = join(names, names.size() - 1);
        return ref;
    }

    PNodePtr parse_selector() {
        if (at("[")) {
            PNodePtr sel = make(NodeType::ArraySelector, pos_);
            ++pos_;
            add(*sel, parse_expression());
            expect("]");
            return sel;
        }
        expect(".");
        const std::size_t t = pos_;
        if (at("<")) {
            PNodePtr inv = make(NodeType::MethodInvocation, t);
            for (auto& a : parse_type_arguments()) add(*inv, std::move(a));
            inv->name = ident();
            for (auto& a : parse_arguments()) add(*inv, std::move(a));
            return inv;
        }
        if (at("new")) return parse_inner_creator(t);
        if (accept("super")) return parse_super_suffix(t, "");
        if (accept("this")) return make(NodeType::This, t);
        std::string member = ident();
        if (at("(")) {
            PNodePtr inv = make(NodeType::MethodInvocation, t);
            inv->name = std::move(member);
            for (auto& a : parse_arguments()) add(*inv, std::move(a));
            return inv;
        }
        PNodePtr ref = make(NodeType::MemberReference, t);
        ref->name = std::move(member);
        return ref;
    }

    PNodePtr parse_inner_creator(std::size_t t) {
        expect("new");
        PNodePtr creator = make(NodeType::InnerClassCreator, t);
        if (at("<")) {
            for (auto& a : parse_type_arguments()) add(*creator, std::move(a));
        }
        skip_type_annotations();
        PNodePtr type = make(NodeType::ReferenceType, pos_);
        type->name = ident();
        if (at("<")) {
            for (auto& a : parse_type_arguments()) add(*type, std::move(a));
        }
        add(*creator, std::move(type));
        for (auto& a : parse_arguments()) add(*creator, std::move(a));
        if (at("{")) parse_class_body(*creator, BodyKind::class_body);
        return creator;
    }

    PNodePtr parse_creator(std::size_t t) {
        expect("new");
        std::vector<PNodePtr> ctor_type_args;
        if (at("<")) ctor_type_args = parse_type_arguments();
        PNodePtr type = parse_type_base();
        if (at("[")) {
            PNodePtr creator = make(NodeType::ArrayCreator, t);
            add(*creator, std::move(type));
            while (at("[")) {
                ++pos_;
                if (!at("]")) add(*creator, parse_expression());
                expect("]");
            }
            if (at("{")) add(*creator, parse_array_initializer());
            return creator;
        }
        PNodePtr creator = make(NodeType::ClassCreator, t);
        for (auto& a : ctor_type_args) add(*creator, std::move(a));
        add(*creator, std::move(type));
        for (auto& a : parse_arguments()) add(*creator, std::move(a));
        if (at("{")) parse_class_body(*creator, BodyKind::class_body);
        return creator;
    }

    // ---- flattening ------------------------------------------------------

    SourceUnit flatten(PNodePtr root) {
        SourceUnit unit;
        unit.path = path_;
        unit.parse_warnings = warnings_;

        struct Item {
            PNode* node;
            std::optional<NodeId> parent;
        };
        std::vector<Item> stack{{root.get(), std::nullopt}};
        while (!stack.empty()) {
            Item item = stack.back();
            stack.pop_back();
            PNode& p = *item.node;
            std::stable_sort(p.children.begin(), p.children.end(),
                             [](const PNodePtr& a, const PNodePtr& b) { return a->first_token < b->first_token; });

            const auto id = static_cast<NodeId>(unit.nodes.size());
            AstNode node;
            node.id = id;
            node.type = p.type;
            node.parent = item.parent;
            node.source_order = p.first_token;
            node.line = p.line;
            node.role = item.parent ? p.role : ChildRole::root;
            node.name = std::move(p.name);
            node.qualifier = std::move(p.qualifier);
            unit.nodes.push_back(std::move(node));
            if (item.parent) unit.nodes[*item.parent].children.push_back(id);

            for (auto it = p.children.rbegin(); it != p.children.rend(); ++it) stack.push_back({it->get(), id});
        }
        unit.root = 0;
        return unit;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::string path_;
    std::vector<std::string> warnings_;
};

}  // namespace

SourceUnit parse_java(std::string_view source, std::string path) {
    std::vector<Token> tokens = tokenize(source, path);
    return Parser(std::move(tokens), std::move(path)).run();
}

}  // namespace codegraph::java
