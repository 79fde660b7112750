#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "codegraph/graph/builder.hpp"
#include "codegraph/java/frontend.hpp"

namespace testing_support {

using codegraph::NodeType;
using codegraph::graph::EdgeType;
using codegraph::graph::ProgramGraph;
using codegraph::java::NodeId;
using codegraph::java::SourceUnit;
using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline SourceUnit parse(const std::string& src) { return codegraph::java::parse_java_file_text(src, "<test>"); }

// Wraps statements in a method of a class.
inline SourceUnit parse_body(const std::string& body) {
    return parse("class T { void m(boolean c, int n, int[] xs) { " + body + " } }");
}

inline EdgeList edges_of(const ProgramGraph& g, EdgeType t) {
    EdgeList out;
    for (const auto& e : g.edges) {
        if (e.type == t) out.emplace_back(e.src, e.dst);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<NodeId> nodes_of(const SourceUnit& u, NodeType t) {
    std::vector<NodeId> out;
    for (const auto& n : u.nodes) {
        if (n.type == t) out.push_back(n.id);
    }
    return out;
}

inline std::size_t count_of(const SourceUnit& u, NodeType t) { return nodes_of(u, t).size(); }

inline std::filesystem::path temp_dir(const std::string& tag) {
    static std::mt19937_64 rng{std::random_device{}()};
    auto dir = std::filesystem::temp_directory_path() / ("codegraph_" + tag + "_" + std::to_string(rng()));
    std::filesystem::create_directories(dir);
    return dir;
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
    std::filesystem::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << text;
}

}  // namespace testing_support
