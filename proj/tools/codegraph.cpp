// codegraph: build, split, summarize and inspect program-graph datasets.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "codegraph/dataset/pipeline.hpp"
#include "codegraph/dataset/serialize.hpp"
#include "codegraph/java/frontend.hpp"
#include "codegraph/relational/relational.hpp"
#include "codegraph/stats/report.hpp"
#include "codegraph/util/parallel.hpp"

namespace fs = std::filesystem;
using namespace codegraph;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoGraphs = 1;
constexpr int kExitBadConfig = 2;

std::vector<graph::Variant> parse_variants(const std::vector<std::string>& names) {
    std::vector<graph::Variant> out;
    for (const std::string& n : names) {
        if (n == "all") return {graph::Variant::ast_only, graph::Variant::relsc_h, graph::Variant::relsc_m};
        if (n == "ast") {
            out.push_back(graph::Variant::ast_only);
        } else if (n == "h") {
            out.push_back(graph::Variant::relsc_h);
        } else if (n == "m") {
            out.push_back(graph::Variant::relsc_m);
        } else {
            throw dataset::ConfigError("unknown variant '" + n + "' (expected ast, h, m or all)");
        }
    }
    return out;
}

graph::Variant parse_variant(const std::string& name) {
    auto v = parse_variants({name});
    if (v.size() != 1) throw dataset::ConfigError("inspect takes one variant, not 'all'");
    return v.front();
}

dataset::SplitRatios parse_ratios(const std::string& text) {
    dataset::SplitRatios r{};
    std::stringstream in(text);
    std::string part;
    std::size_t i = 0;
    while (std::getline(in, part, ',')) {
        if (i >= 3) throw dataset::ConfigError("--ratios takes exactly three values");
        try {
            std::size_t used = 0;
            r[i] = std::stod(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw dataset::ConfigError("--ratios value '" + part + "' is not a number");
        }
        ++i;
    }
    if (i != 3) throw dataset::ConfigError("--ratios takes exactly three values");
    return r;
}

int run_build(const dataset::PipelineConfig& config) {
    const dataset::PipelineResult result = dataset::run_pipeline(config);
    std::cerr << "built " << result.graph_count << " graphs, rejected " << result.rejected_count << " files -> "
              << config.out_dir.string() << '\n';
    for (const auto& w : result.manifest["warnings"]) std::cerr << "warning: " << w.get<std::string>() << '\n';
    return result.exit_code == 0 ? kExitOk : kExitNoGraphs;
}

std::vector<graph::ProgramGraph> load_graph_dir(const fs::path& dir) {
    std::vector<graph::ProgramGraph> graphs;
    for (graph::Variant v : {graph::Variant::ast_only, graph::Variant::relsc_h, graph::Variant::relsc_m}) {
        const fs::path p = dir / dataset::file_name_of(v);
        if (!fs::exists(p)) continue;
        auto part = dataset::read_graphs_jsonl(p);
        graphs.insert(graphs.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return graphs;
}

int run_stats(const fs::path& dir, const std::string& report, const std::string& out, std::size_t bins,
              std::size_t jobs) {
    if (report != "csv" && report != "json") throw dataset::ConfigError("--report must be csv or json");
    if (!fs::is_directory(dir)) throw dataset::ConfigError("not a directory: " + dir.string());
    std::string dataset_name = fs::absolute(dir).lexically_normal().filename().string();
    if (fs::exists(dir / "manifest.json")) {
        std::ifstream in(dir / "manifest.json");
        const auto manifest = nlohmann::json::parse(in);
        dataset_name = manifest.at("datasets").at(0).at("name").get<std::string>();
    }
    const std::vector<graph::ProgramGraph> graphs = load_graph_dir(dir);
    if (graphs.empty()) {
        std::cerr << "no graph files in " << dir.string() << '\n';
        return kExitNoGraphs;
    }
    std::vector<stats::CorpusGraph> corpus;
    for (const auto& g : graphs) corpus.push_back({dataset_name, g.id.substr(0, g.id.find('/')), &g});
    const stats::ReportOptions options{bins, jobs};
    if (report == "json") {
        const std::string text = stats::corpus_report(corpus, options).dump(2);
        if (out.empty()) {
            std::cout << text << '\n';
        } else {
            std::ofstream(out) << text << '\n';
        }
    } else {
        const fs::path target = out.empty() ? dir / "stats" : fs::path(out);
        for (const auto& name : stats::write_csv_reports(corpus, target, options)) {
            std::cout << (target / name).string() << '\n';
        }
    }
    return kExitOk;
}

int run_inspect(const std::string& id, const fs::path& dir, const std::string& variant_name) {
    const graph::Variant variant = parse_variant(variant_name);
    const fs::path file = dir / dataset::file_name_of(variant);
    std::ifstream in(file);
    if (!in) throw dataset::ConfigError("cannot read " + file.string());
    std::string line;
    while (std::getline(in, line)) {
        const auto j = nlohmann::json::parse(line);
        if (j.at("id").get<std::string>() != id) continue;
        const graph::ProgramGraph g = dataset::graph_from_json(j);
        std::cout << "graph       " << g.id << '\n'
                  << "variant     " << graph::name_of(g.variant) << '\n'
                  << "provenance  " << g.provenance << '\n'
                  << "target      " << (g.target ? std::to_string(*g.target) : std::string("-")) << '\n'
                  << "nodes       " << g.nodes.size() << '\n'
                  << "edges       " << g.edges.size() << '\n';
        const auto counts = graph::edge_type_counts(g);
        for (std::size_t t = 0; t < counts.size(); ++t) {
            if (counts[t]) std::cout << "  " << graph::name_of(static_cast<graph::EdgeType>(t)) << ' ' << counts[t] << '\n';
        }
        for (const auto& note : g.notes) std::cout << "note        " << note << '\n';
        std::cout << "\nnodes:\n";
        for (const auto& n : g.nodes) {
            std::cout << "  " << n.id << "  " << name_of(n.type) << "  [" << name_of(categorize(n.type)) << "]";
            for (std::size_t t = 0; t < graph::kEdgeTypeCount; ++t) {
                if (n.feature.edge_counts[t]) {
                    std::cout << ' ' << graph::name_of(static_cast<graph::EdgeType>(t)) << '=' << n.feature.edge_counts[t];
                }
            }
            std::cout << '\n';
        }
        std::cout << "\nedges:\n";
        for (const auto& e : g.edges) {
            std::cout << "  " << e.src << " -> " << e.dst << "  " << graph::name_of(e.type);
            if (e.relation) {
                const auto [a, b] = relational::relation_categories(*e.relation);
                std::cout << "  r" << int(*e.relation) << " (" << name_of(a) << " -> " << name_of(b) << ')'
                          << (e.inverse ? " inverse" : "");
            }
            std::cout << '\n';
        }
        return kExitOk;
    }
    std::cerr << "no graph '" << id << "' in " << file.string() << '\n';
    return kExitNoGraphs;
}

int run_ast(const fs::path& file) {
    const java::SourceUnit unit = java::parse_java_file(file.string());
    std::cout << java::ast_to_json(unit).dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Java source to program-graph dataset builder"};
    app.require_subcommand(1);

    dataset::PipelineConfig config;
    config.jobs = util::default_jobs();
    std::vector<std::string> inputs;
    std::vector<std::string> variant_names{"all"};
    std::string labels;
    std::string out_dir;
    std::string ratios_text = "0.7,0.15,0.15";
    bool no_timestamp = false;
    auto* build = app.add_subcommand("build", "Parse sources and write graphs, manifest, splits and statistics");
    build->add_option("--input", inputs, "Project directory (repeatable)")->required();
    build->add_option("--labels", labels, "CSV with header path,seconds[,runs]");
    build->add_option("--variant", variant_names, "ast, h, m or all (repeatable)");
    build->add_option("--out", out_dir, "Output directory")->required();
    build->add_flag("--add-inverse,!--no-add-inverse", config.add_inverse, "Emit inverse relational edges (default on)");
    build->add_flag("--exclude-interfaces", config.exclude_interfaces, "Reject files declaring only interfaces");
    build->add_option("--seed", config.seed, "Split seed");
    build->add_option("--ratios", ratios_text, "Train,val,test ratios");
    build->add_option("--dataset", config.dataset_name, "Dataset name (default: output directory name)");
    build->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
    build->add_option("--bins", config.target_bins, "Target histogram bins")->check(CLI::PositiveNumber);
    build->add_flag("--no-timestamp", no_timestamp, "Omit the creation time from the manifest");

    std::string split_dir = ".";
    std::uint64_t split_seed = 42;
    std::string split_ratios = "0.7,0.15,0.15";
    auto* split = app.add_subcommand("split", "Recompute splits.json for a build directory");
    split->add_option("--dir", split_dir, "Build directory");
    split->add_option("--ratios", split_ratios, "Train,val,test ratios");
    split->add_option("--seed", split_seed, "Split seed");

    std::string stats_dir = ".";
    std::string report = "csv";
    std::string stats_out;
    std::size_t stats_bins = 20;
    auto* stats_cmd = app.add_subcommand("stats", "Corpus statistics for a directory of graph files");
    stats_cmd->add_option("--graphs", stats_dir, "Directory holding graphs_*.jsonl");
    stats_cmd->add_option("--report", report, "csv or json");
    stats_cmd->add_option("--out", stats_out, "Output directory (csv) or file (json)");
    stats_cmd->add_option("--bins", stats_bins, "Target histogram bins")->check(CLI::PositiveNumber);

    std::string inspect_id;
    std::string inspect_dir = ".";
    std::string inspect_variant = "h";
    auto* inspect = app.add_subcommand("inspect", "Human-readable dump of one graph");
    inspect->add_option("graph-id", inspect_id, "Graph id as listed in the manifest")->required();
    inspect->add_option("--dir", inspect_dir, "Build directory");
    inspect->add_option("--variant", inspect_variant, "ast, h or m");

    std::string ast_file;
    auto* ast = app.add_subcommand("ast", "Print the typed AST of one Java file as JSON");
    ast->add_option("file", ast_file, "Java source file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadConfig;
    }

    try {
        if (*build) {
            for (const auto& i : inputs) config.inputs.emplace_back(i);
            if (!labels.empty()) config.labels = labels;
            config.variants = parse_variants(variant_names);
            config.out_dir = out_dir;
            config.ratios = parse_ratios(ratios_text);
            config.timestamp = !no_timestamp;
            return run_build(config);
        }
        if (*split) {
            const auto result = dataset::resplit(split_dir, parse_ratios(split_ratios), split_seed);
            std::cout << result["counts"].dump(2) << '\n';
            return kExitOk;
        }
        if (*stats_cmd) return run_stats(stats_dir, report, stats_out, stats_bins, util::default_jobs());
        if (*inspect) return run_inspect(inspect_id, inspect_dir, inspect_variant);
        if (*ast) return run_ast(ast_file);
    } catch (const dataset::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadConfig;
    } catch (const java::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNoGraphs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNoGraphs;
    }
    return kExitOk;
}
