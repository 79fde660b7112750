#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "codegraph/graph/program_graph.hpp"

namespace codegraph::dataset {

// One graph per JSON Lines record:
//   {"id", "variant", "provenance", "target", "nodes": [{"id","type","category","feature"}],
//    "edges": [{"src","dst","edge_type"[,"relation","inverse"]}][, "notes"]}
// `feature` is the 83-long integer array; relation fields appear only on relsc_m.

nlohmann::ordered_json graph_to_json(const graph::ProgramGraph& g);

/// Throws std::invalid_argument on schema violations (unknown variant, node
/// or edge type, feature inconsistent with the node type, ...).
graph::ProgramGraph graph_from_json(const nlohmann::json& j);

std::string serialize_graph(const graph::ProgramGraph& g);
graph::ProgramGraph deserialize_graph(std::string_view line);

void write_graphs_jsonl(const std::filesystem::path& path, std::span<const graph::ProgramGraph> graphs);
std::vector<graph::ProgramGraph> read_graphs_jsonl(const std::filesystem::path& path);

}  // namespace codegraph::dataset
