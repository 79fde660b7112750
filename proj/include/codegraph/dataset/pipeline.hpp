#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "codegraph/dataset/splits.hpp"
#include "codegraph/graph/program_graph.hpp"

namespace codegraph::dataset {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Invalid configuration: missing inputs, unreadable label file, bad ratios.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct PipelineConfig {
    /// Each input directory is one project; its name is the project name.
    std::vector<std::filesystem::path> inputs;
    std::optional<std::filesystem::path> labels;
    std::vector<graph::Variant> variants{graph::Variant::ast_only, graph::Variant::relsc_h, graph::Variant::relsc_m};
    std::filesystem::path out_dir;
    /// Empty: derived from the output directory name.
    std::string dataset_name;
    bool add_inverse = true;
    bool exclude_interfaces = false;
    std::uint64_t seed = 42;
    SplitRatios ratios = kDefaultRatios;
    std::size_t jobs = 1;
    std::size_t target_bins = 20;
    /// Leave out the wall-clock field so reruns are byte identical.
    bool timestamp = true;
};

struct PipelineResult {
    nlohmann::ordered_json manifest;
    std::size_t graph_count = 0;
    std::size_t rejected_count = 0;
    /// 0 when at least one graph was built, 1 otherwise.
    int exit_code = 0;
};

std::string_view file_name_of(graph::Variant v) noexcept;

/// Parses every `.java` file under the inputs, builds the requested graph
/// variants, attaches normalized targets, and writes the graph files,
/// manifest.json, splits.json and the statistics CSVs under `out_dir`.
/// Per-file failures end up in the manifest's `rejected` list.
///
/// Throws ConfigError for unusable configuration.
PipelineResult run_pipeline(const PipelineConfig& config);

/// Recomputes splits.json (and the manifest's split summary) for an existing
/// build directory. Throws ConfigError when the directory has no manifest.
nlohmann::ordered_json resplit(const std::filesystem::path& dir, const SplitRatios& ratios, std::uint64_t seed);

/// Serializes split assignments with per-dataset and per-project counts.
nlohmann::ordered_json splits_to_json(const std::string& dataset, const std::vector<SplitAssignment>& assignments,
                                      const SplitRatios& ratios, std::uint64_t seed);

}  // namespace codegraph::dataset
