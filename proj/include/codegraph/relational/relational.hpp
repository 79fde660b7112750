#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "codegraph/graph/program_graph.hpp"
#include "codegraph/taxonomy.hpp"

namespace codegraph::relational {

inline constexpr std::size_t kRelationCount = kCategoryCount * kCategoryCount;  // 49

constexpr std::uint8_t relation_id(Category src, Category dst) noexcept {
    return static_cast<std::uint8_t>(kCategoryCount * ordinal(src) + ordinal(dst));
}
std::pair<Category, Category> relation_categories(std::uint8_t id);

using RelationMatrix = std::array<std::array<std::uint64_t, kCategoryCount>, kCategoryCount>;

/// Types every edge by its (source category, target category) pair. With
/// `add_inverse`, each edge is followed by its reverse carrying the swapped
/// pair. Node features are carried over untouched.
/// Throws std::invalid_argument unless `h.variant` is relsc_h.
graph::ProgramGraph build_relsc_m(const graph::ProgramGraph& h, bool add_inverse = true);

/// cell[i][j] = number of edges typed (category i, category j).
/// Throws std::invalid_argument unless `g.variant` is relsc_m.
RelationMatrix relation_histogram(const graph::ProgramGraph& g);

}  // namespace codegraph::relational
