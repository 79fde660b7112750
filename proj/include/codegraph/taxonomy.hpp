#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace codegraph {

inline constexpr std::size_t kNodeTypeCount = 72;
inline constexpr std::size_t kCategoryCount = 7;

// Enumerators follow the canonical table order; the ordinal is the one-hot position.
enum class NodeType : std::uint8_t {
    AnnotationMethod,
    InferredFormalParameter,
    LocalVariableDeclaration,
    SuperConstructorInvocation,
    Import,
    ArraySelector,
    BreakStatement,
    FieldDeclaration,
    EnumDeclaration,
    ConstructorDeclaration,
    Annotation,
    ReferenceType,
    EnhancedForControl,
    TypeParameter,
    Statement,
    CompilationUnit,
    EnumConstantDeclaration,
    IfStatement,
    ClassCreator,
    SwitchStatement,
    EnumBody,
    PackageDeclaration,
    Cast,
    VariableDeclaration,
    ArrayCreator,
    This,
    MethodReference,
    InnerClassCreator,
    InterfaceDeclaration,
    FormalParameter,
    CatchClauseParameter,
    SynchronizedStatement,
    VoidClassReference,
    TypeArgument,
    DoStatement,
    Assignment,
    ContinueStatement,
    AssertStatement,
    ExplicitConstructorInvocation,
    AnnotationDeclaration,
    StringLiteralExpr,
    PrimitiveType,
    TryStatement,
    ElementArrayValue,
    BlockStatement,
    ClassReference,
    ReturnStatement,
    IntegerLiteralExpr,
    TernaryExpression,
    VariableDeclarator,
    BinaryOperation,
    ClassDeclaration,
    TryResource,
    MemberReference,
    SuperMemberReference,
    Literal,
    CatchClause,
    WhileStatement,
    ElementValuePair,
    ForStatement,
    StatementExpression,
    ConstantDeclaration,
    ArrayInitializer,
    MethodInvocation,
    Modifier,
    ThrowStatement,
    LambdaExpression,
    SwitchStatementCase,
    MethodDeclaration,
    BasicType,
    SuperMethodInvocation,
    ForControl,
};

enum class Category : std::uint8_t {
    declarations,
    types_and_references,
    control_flow,
    expressions_and_operations,
    code_structure,
    exceptions,
    literals_and_constants,
};

struct TaxonomyRow {
    NodeType type;
    std::string_view name;
    Category category;
};

/// The node-type table: 72 rows, one per NodeType, in ordinal order.
std::span<const TaxonomyRow> canonical_taxonomy() noexcept;

constexpr std::size_t ordinal(NodeType t) noexcept { return static_cast<std::size_t>(t); }
constexpr std::size_t ordinal(Category c) noexcept { return static_cast<std::size_t>(c); }

std::string_view name_of(NodeType t) noexcept;
std::string_view name_of(Category c) noexcept;

std::optional<NodeType> node_type_from_name(std::string_view name) noexcept;
std::optional<Category> category_from_name(std::string_view name) noexcept;

/// Total over NodeType; reads the same table canonical_taxonomy() returns.
Category categorize(NodeType t) noexcept;

}  // namespace codegraph
