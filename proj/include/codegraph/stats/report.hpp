#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "codegraph/graph/program_graph.hpp"

namespace codegraph::stats {

struct CorpusGraph {
    std::string dataset;
    std::string project;
    const graph::ProgramGraph* graph = nullptr;
};

struct ReportOptions {
    std::size_t target_bins = 20;
    std::size_t jobs = 1;
};

// Rows are grouped by dataset and by "dataset/project", and within a group
// by graph variant. Column layout of every CSV is fixed and documented in
// the README.

nlohmann::ordered_json corpus_report(std::span<const CorpusGraph> corpus, const ReportOptions& options);

/// Writes size_stats.csv, category_distribution.csv, relation_matrix.csv,
/// structural_metrics.csv, structural_metrics_per_graph.csv,
/// degree_histogram.csv, target_histogram.csv and target_summary.csv into
/// `dir`. Returns the file names written.
std::vector<std::string> write_csv_reports(std::span<const CorpusGraph> corpus, const std::filesystem::path& dir,
                                           const ReportOptions& options);

}  // namespace codegraph::stats
