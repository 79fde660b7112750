#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "codegraph/graph/program_graph.hpp"
#include "codegraph/relational/relational.hpp"

namespace codegraph::stats {

/// Mean, population standard deviation (divisor n), min and max.
struct Summary {
    std::size_t n = 0;
    double mean = 0.0;
    double std = 0.0;
    double min = 0.0;
    double max = 0.0;
};

Summary summarize(std::span<const double> values);

struct SizeStats {
    Summary nodes;
    Summary edges;
};

SizeStats size_stats(std::span<const graph::ProgramGraph* const> graphs);

/// Node count per category, indexed by category ordinal.
std::array<std::size_t, kCategoryCount> category_counts(const graph::ProgramGraph& g);

struct MeanWithError {
    double mean = 0.0;
    /// Sample standard deviation (divisor n-1) over sqrt(n); 0 for a single graph.
    double standard_error = 0.0;
};

std::array<MeanWithError, kCategoryCount> category_distribution(std::span<const graph::ProgramGraph* const> graphs);

/// Metrics of the undirected simple graph underlying `g` (parallel edges and
/// directions collapsed). Diameter and average path length are taken over
/// the largest connected component (ties: the one holding the smallest node
/// id). Assortativity is empty when undefined (fewer than 2 nodes, no edges,
/// or all edge endpoints share one degree).
struct StructuralMetrics {
    double density = 0.0;
    double avg_degree = 0.0;
    double clustering = 0.0;
    double diameter = 0.0;
    double avg_path_length = 0.0;
    std::optional<double> assortativity;
};

StructuralMetrics structural_metrics(const graph::ProgramGraph& g);

/// Adjacency sets of the undirected simple graph, shared with tests.
std::vector<std::vector<graph::NodeId>> undirected_simple(const graph::ProgramGraph& g);

/// degree -> number of nodes, where degree is in + out over all edges.
std::map<std::size_t, std::size_t> degree_histogram(std::span<const graph::ProgramGraph* const> graphs);

struct TargetHistogram {
    std::vector<std::size_t> counts;
    /// Fraction of targets in [0, 0.22].
    double low_mass = 0.0;
    bool skewed = false;
};

/// Fixed-width bins over [0,1]: [l, r) except the last, which is closed.
/// Values outside [0,1] are clamped. `skewed` is set when at least half of
/// the targets lie in [0, 0.22].
TargetHistogram target_histogram(std::span<const double> targets, std::size_t bins);

using MeanRelationMatrix = std::array<std::array<double, kCategoryCount>, kCategoryCount>;

/// Per-graph relation histograms averaged over graphs.
MeanRelationMatrix mean_relation_matrix(std::span<const graph::ProgramGraph* const> graphs);

}  // namespace codegraph::stats
