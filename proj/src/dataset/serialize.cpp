#include "codegraph/dataset/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace codegraph::dataset {

using graph::Edge;
using graph::ProgramGraph;
using nlohmann::json;
using nlohmann::ordered_json;

ordered_json graph_to_json(const ProgramGraph& g) {
    ordered_json j;
    j["id"] = g.id;
    j["variant"] = graph::name_of(g.variant);
    j["provenance"] = g.provenance;
    j["target"] = g.target ? ordered_json(*g.target) : ordered_json(nullptr);
    ordered_json nodes = ordered_json::array();
    for (const graph::GraphNode& n : g.nodes) {
        ordered_json node;
        node["id"] = n.id;
        node["type"] = name_of(n.type);
        node["category"] = name_of(categorize(n.type));
        node["feature"] = n.feature.dense();
        nodes.push_back(std::move(node));
    }
    j["nodes"] = std::move(nodes);
    const bool relational = g.variant == graph::Variant::relsc_m;
    ordered_json edges = ordered_json::array();
    for (const Edge& e : g.edges) {
        ordered_json edge;
        edge["src"] = e.src;
        edge["dst"] = e.dst;
        edge["edge_type"] = graph::name_of(e.type);
        if (relational) {
            edge["relation"] = e.relation.value_or(0);
            edge["inverse"] = e.inverse;
        }
        edges.push_back(std::move(edge));
    }
    j["edges"] = std::move(edges);
    if (!g.notes.empty()) j["notes"] = g.notes;
    return j;
}

ProgramGraph graph_from_json(const json& j) {
    try {
        ProgramGraph g;
        g.id = j.at("id").get<std::string>();
        g.variant = graph::variant_from_name(j.at("variant").get<std::string>());
        g.provenance = j.at("provenance").get<std::string>();
        if (!j.at("target").is_null()) g.target = j.at("target").get<double>();
        for (const json& n : j.at("nodes")) {
            graph::GraphNode node;
            node.id = n.at("id").get<graph::NodeId>();
            const auto type = node_type_from_name(n.at("type").get<std::string>());
            if (!type) throw std::invalid_argument("unknown node type '" + n.at("type").get<std::string>() + "'");
            node.type = *type;
            const auto dense = n.at("feature").get<std::vector<std::uint32_t>>();
            if (dense.size() != graph::kFeatureLength) throw std::invalid_argument("feature length is not 83");
            for (std::size_t i = 0; i < kNodeTypeCount; ++i) {
                if (dense[i] != (i == ordinal(node.type) ? 1u : 0u)) {
                    throw std::invalid_argument("feature one-hot does not match node type on node " +
                                                std::to_string(node.id));
                }
            }
            node.feature.type = node.type;
            for (std::size_t i = 0; i < graph::kEdgeTypeCount; ++i) node.feature.edge_counts[i] = dense[kNodeTypeCount + i];
            g.nodes.push_back(node);
        }
        for (const json& e : j.at("edges")) {
            Edge edge;
            edge.src = e.at("src").get<graph::NodeId>();
            edge.dst = e.at("dst").get<graph::NodeId>();
            edge.type = graph::edge_type_from_name(e.at("edge_type").get<std::string>());
            if (e.contains("relation")) edge.relation = e.at("relation").get<std::uint8_t>();
            if (e.contains("inverse")) edge.inverse = e.at("inverse").get<bool>();
            g.edges.push_back(edge);
        }
        if (j.contains("notes")) g.notes = j.at("notes").get<std::vector<std::string>>();
        graph::validate(g);
        return g;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed graph record: ") + e.what());
    } catch (const std::logic_error& e) {
        throw std::invalid_argument(std::string("inconsistent graph record: ") + e.what());
    }
}

std::string serialize_graph(const ProgramGraph& g) { return graph_to_json(g).dump(); }

ProgramGraph deserialize_graph(std::string_view line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("graph record is not valid JSON: ") + e.what());
    }
    return graph_from_json(j);
}

void write_graphs_jsonl(const std::filesystem::path& path, std::span<const ProgramGraph> graphs) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    for (const ProgramGraph& g : graphs) out << serialize_graph(g) << '\n';
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::vector<ProgramGraph> read_graphs_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::vector<ProgramGraph> graphs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            graphs.push_back(deserialize_graph(line));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return graphs;
}

}  // namespace codegraph::dataset
