#include "codegraph/taxonomy.hpp"

namespace codegraph {
namespace {

// The source table lists CompilationUnit twice; the first row
// (code_structure) is kept.
constexpr std::array<TaxonomyRow, kNodeTypeCount> kTable{{
    {NodeType::AnnotationMethod, "AnnotationMethod", Category::declarations},
    {NodeType::InferredFormalParameter, "InferredFormalParameter", Category::declarations},
    {NodeType::LocalVariableDeclaration, "LocalVariableDeclaration", Category::declarations},
    {NodeType::SuperConstructorInvocation, "SuperConstructorInvocation", Category::expressions_and_operations},
    {NodeType::Import, "Import", Category::code_structure},
    {NodeType::ArraySelector, "ArraySelector", Category::types_and_references},
    {NodeType::BreakStatement, "BreakStatement", Category::control_flow},
    {NodeType::FieldDeclaration, "FieldDeclaration", Category::declarations},
    {NodeType::EnumDeclaration, "EnumDeclaration", Category::declarations},
    {NodeType::ConstructorDeclaration, "ConstructorDeclaration", Category::declarations},
    {NodeType::Annotation, "Annotation", Category::code_structure},
    {NodeType::ReferenceType, "ReferenceType", Category::types_and_references},
    {NodeType::EnhancedForControl, "EnhancedForControl", Category::control_flow},
    {NodeType::TypeParameter, "TypeParameter", Category::declarations},
    {NodeType::Statement, "Statement", Category::control_flow},
    {NodeType::CompilationUnit, "CompilationUnit", Category::code_structure},
    {NodeType::EnumConstantDeclaration, "EnumConstantDeclaration", Category::literals_and_constants},
    {NodeType::IfStatement, "IfStatement", Category::control_flow},
    {NodeType::ClassCreator, "ClassCreator", Category::code_structure},
    {NodeType::SwitchStatement, "SwitchStatement", Category::control_flow},
    {NodeType::EnumBody, "EnumBody", Category::code_structure},
    {NodeType::PackageDeclaration, "PackageDeclaration", Category::code_structure},
    {NodeType::Cast, "Cast", Category::types_and_references},
    {NodeType::VariableDeclaration, "VariableDeclaration", Category::declarations},
    {NodeType::ArrayCreator, "ArrayCreator", Category::types_and_references},
    {NodeType::This, "This", Category::types_and_references},
    {NodeType::MethodReference, "MethodReference", Category::expressions_and_operations},
    {NodeType::InnerClassCreator, "InnerClassCreator", Category::code_structure},
    {NodeType::InterfaceDeclaration, "InterfaceDeclaration", Category::declarations},
    {NodeType::FormalParameter, "FormalParameter", Category::declarations},
    {NodeType::CatchClauseParameter, "CatchClauseParameter", Category::exceptions},
    {NodeType::SynchronizedStatement, "SynchronizedStatement", Category::control_flow},
    {NodeType::VoidClassReference, "VoidClassReference", Category::types_and_references},
    {NodeType::TypeArgument, "TypeArgument", Category::types_and_references},
    {NodeType::DoStatement, "DoStatement", Category::control_flow},
    {NodeType::Assignment, "Assignment", Category::expressions_and_operations},
    {NodeType::ContinueStatement, "ContinueStatement", Category::control_flow},
    {NodeType::AssertStatement, "AssertStatement", Category::exceptions},
    {NodeType::ExplicitConstructorInvocation, "ExplicitConstructorInvocation", Category::declarations},
    {NodeType::AnnotationDeclaration, "AnnotationDeclaration", Category::declarations},
    {NodeType::StringLiteralExpr, "StringLiteralExpr", Category::literals_and_constants},
    {NodeType::PrimitiveType, "PrimitiveType", Category::types_and_references},
    {NodeType::TryStatement, "TryStatement", Category::control_flow},
    {NodeType::ElementArrayValue, "ElementArrayValue", Category::code_structure},
    {NodeType::BlockStatement, "BlockStatement", Category::code_structure},
    {NodeType::ClassReference, "ClassReference", Category::types_and_references},
    {NodeType::ReturnStatement, "ReturnStatement", Category::control_flow},
    {NodeType::IntegerLiteralExpr, "IntegerLiteralExpr", Category::literals_and_constants},
    {NodeType::TernaryExpression, "TernaryExpression", Category::expressions_and_operations},
    {NodeType::VariableDeclarator, "VariableDeclarator", Category::declarations},
    {NodeType::BinaryOperation, "BinaryOperation", Category::expressions_and_operations},
    {NodeType::ClassDeclaration, "ClassDeclaration", Category::declarations},
    {NodeType::TryResource, "TryResource", Category::exceptions},
    {NodeType::MemberReference, "MemberReference", Category::expressions_and_operations},
    {NodeType::SuperMemberReference, "SuperMemberReference", Category::expressions_and_operations},
    {NodeType::Literal, "Literal", Category::literals_and_constants},
    {NodeType::CatchClause, "CatchClause", Category::exceptions},
    {NodeType::WhileStatement, "WhileStatement", Category::control_flow},
    {NodeType::ElementValuePair, "ElementValuePair", Category::code_structure},
    {NodeType::ForStatement, "ForStatement", Category::control_flow},
    {NodeType::StatementExpression, "StatementExpression", Category::expressions_and_operations},
    {NodeType::ConstantDeclaration, "ConstantDeclaration", Category::declarations},
    {NodeType::ArrayInitializer, "ArrayInitializer", Category::types_and_references},
    {NodeType::MethodInvocation, "MethodInvocation", Category::expressions_and_operations},
    {NodeType::Modifier, "Modifier", Category::declarations},
    {NodeType::ThrowStatement, "ThrowStatement", Category::control_flow},
    {NodeType::LambdaExpression, "LambdaExpression", Category::expressions_and_operations},
    {NodeType::SwitchStatementCase, "SwitchStatementCase", Category::code_structure},
    {NodeType::MethodDeclaration, "MethodDeclaration", Category::declarations},
    {NodeType::BasicType, "BasicType", Category::types_and_references},
    {NodeType::SuperMethodInvocation, "SuperMethodInvocation", Category::expressions_and_operations},
    {NodeType::ForControl, "ForControl", Category::control_flow},
}};

constexpr bool table_is_ordinal_indexed() {
    for (std::size_t i = 0; i < kTable.size(); ++i) {
        if (static_cast<std::size_t>(kTable[i].type) != i) return false;
    }
    return true;
}
static_assert(table_is_ordinal_indexed());

constexpr std::array<std::string_view, kCategoryCount> kCategoryNames{
    "declarations",   "types_and_references", "control_flow",          "expressions_and_operations",
    "code_structure", "exceptions",           "literals_and_constants",
};

}  // namespace

std::span<const TaxonomyRow> canonical_taxonomy() noexcept { return kTable; }

std::string_view name_of(NodeType t) noexcept { return kTable[ordinal(t)].name; }

std::string_view name_of(Category c) noexcept { return kCategoryNames[ordinal(c)]; }

std::optional<NodeType> node_type_from_name(std::string_view name) noexcept {
    for (const auto& row : kTable) {
        if (row.name == name) return row.type;
    }
    return std::nullopt;
}

std::optional<Category> category_from_name(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kCategoryNames.size(); ++i) {
        if (kCategoryNames[i] == name) return static_cast<Category>(i);
    }
    return std::nullopt;
}

Category categorize(NodeType t) noexcept { return kTable[ordinal(t)].category; }

}  // namespace codegraph
