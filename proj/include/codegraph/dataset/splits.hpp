#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace codegraph::dataset {

enum class Split : std::uint8_t { train, val, test };

std::string_view name_of(Split s) noexcept;

struct SplitItem {
    std::string graph_id;
    std::string project;
};

struct SplitAssignment {
    std::string graph_id;
    Split split = Split::train;
    std::string project;

    friend bool operator==(const SplitAssignment&, const SplitAssignment&) = default;
};

using SplitRatios = std::array<double, 3>;
inline constexpr SplitRatios kDefaultRatios{0.70, 0.15, 0.15};

/// Dataset-level sizes: floor for train and val, the remainder to test.
std::array<std::size_t, 3> split_sizes(std::size_t n, const SplitRatios& ratios);

/// Stratified split of one dataset. Dataset totals follow split_sizes; each
/// project receives floor or ceil of its own share per split (one extra test
/// graph is allowed only when the dataset totals force it), then its graphs
/// are shuffled with a seeded generator and cut accordingly. Projects are
/// processed in name order, so the result depends only on the input set and
/// the seed. Output is sorted by graph id.
///
/// Throws std::invalid_argument for ratios that are negative or do not sum
/// to 1, duplicate graph ids, or a project with fewer than 3 graphs.
std::vector<SplitAssignment> make_splits(std::vector<SplitItem> items, const SplitRatios& ratios,
                                         std::uint64_t seed);

}  // namespace codegraph::dataset
