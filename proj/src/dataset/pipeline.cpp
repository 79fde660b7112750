#include "codegraph/dataset/pipeline.hpp"

#include <cmath>
#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <map>
#include <set>

#include "codegraph/dataset/labels.hpp"
#include "codegraph/dataset/normalize.hpp"
#include "codegraph/dataset/serialize.hpp"
#include "codegraph/graph/builder.hpp"
#include "codegraph/java/frontend.hpp"
#include "codegraph/relational/relational.hpp"
#include "codegraph/stats/report.hpp"
#include "codegraph/util/parallel.hpp"

namespace codegraph::dataset {
namespace {

void check_ratios(const SplitRatios& ratios) {
    for (double r : ratios) {
        if (!(r >= 0.0)) throw ConfigError("split ratios must be non-negative");
    }
    if (std::abs(ratios[0] + ratios[1] + ratios[2] - 1.0) > 1e-6) throw ConfigError("split ratios must sum to 1");
}

namespace fs = std::filesystem;
using graph::ProgramGraph;
using graph::Variant;
using nlohmann::ordered_json;

struct SourceFile {
    std::string id;
    std::string project;
    fs::path path;
    std::string key;  // absolute normalized path, matches label records
};

struct FileResult {
    std::optional<std::string> rejected;
    std::vector<std::string> parse_warnings;
    std::map<Variant, ProgramGraph> graphs;
};

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_json(const fs::path& path, const ordered_json& j) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

ordered_json read_json(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read " + path.string());
    try {
        return ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

std::vector<SourceFile> collect_sources(const PipelineConfig& config) {
    std::vector<SourceFile> files;
    std::set<std::string> projects;
    for (const fs::path& raw : config.inputs) {
        const fs::path input = fs::absolute(raw).lexically_normal();
        fs::path dir = input;
        if (!dir.has_filename()) dir = dir.parent_path();
        if (!fs::is_directory(dir)) throw ConfigError("input is not a directory: " + raw.string());
        const std::string project = dir.filename().string();
        if (!projects.insert(project).second) throw ConfigError("two inputs share the project name '" + project + "'");
        for (const auto& entry : fs::recursive_directory_iterator(dir)) {
            if (!entry.is_regular_file() || entry.path().extension() != ".java") continue;
            const fs::path p = entry.path().lexically_normal();
            files.push_back(SourceFile{p.lexically_relative(dir.parent_path()).generic_string(), project, p,
                                       p.generic_string()});
        }
    }
    std::sort(files.begin(), files.end(), [](const SourceFile& a, const SourceFile& b) { return a.id < b.id; });
    return files;
}

FileResult process_file(const SourceFile& file, const PipelineConfig& config, const std::set<Variant>& variants,
                        bool labels_required, bool labelled) {
    FileResult result;
    if (labels_required && !labelled) {
        result.rejected = "no execution-time label";
        return result;
    }
    java::SourceUnit unit;
    try {
        unit = java::parse_java_file(file.path.string());
    } catch (const java::UnsupportedConstruct& e) {
        result.rejected = "unsupported construct at line " + std::to_string(e.line()) + ": " + e.construct();
        return result;
    } catch (const java::ParseError& e) {
        result.rejected = "parse error at line " + std::to_string(e.line()) + ": " + e.message();
        return result;
    }
    if (config.exclude_interfaces && java::is_interface_only(unit)) {
        result.rejected = "interface-only file excluded";
        return result;
    }
    unit.path = file.id;
    result.parse_warnings = unit.parse_warnings;

    auto stamp = [&](ProgramGraph g) {
        g.id = file.id;
        g.provenance = file.path.generic_string();
        return g;
    };
    if (variants.count(Variant::ast_only)) result.graphs[Variant::ast_only] = stamp(graph::build_ast_only(unit));
    if (variants.count(Variant::relsc_h) || variants.count(Variant::relsc_m)) {
        ProgramGraph h = stamp(graph::build_relsc_h(unit));
        if (variants.count(Variant::relsc_m)) {
            result.graphs[Variant::relsc_m] = relational::build_relsc_m(h, config.add_inverse);
        }
        if (variants.count(Variant::relsc_h)) result.graphs[Variant::relsc_h] = std::move(h);
    }
    return result;
}

}  // namespace

std::string_view file_name_of(Variant v) noexcept {
    switch (v) {
        case Variant::ast_only:
            return "graphs_ast.jsonl";
        case Variant::relsc_h:
            return "graphs_h.jsonl";
        case Variant::relsc_m:
            return "graphs_m.jsonl";
    }
    return "graphs.jsonl";
}

ordered_json splits_to_json(const std::string& dataset, const std::vector<SplitAssignment>& assignments,
                            const SplitRatios& ratios, std::uint64_t seed) {
    std::map<std::string, std::array<std::size_t, 3>> per_project;
    std::array<std::size_t, 3> total{};
    ordered_json list = ordered_json::array();
    for (const SplitAssignment& a : assignments) {
        ++per_project[a.project][static_cast<std::size_t>(a.split)];
        ++total[static_cast<std::size_t>(a.split)];
        list.push_back({{"graph_id", a.graph_id}, {"project", a.project}, {"split", name_of(a.split)}});
    }
    auto counts = [](const std::array<std::size_t, 3>& c) {
        return ordered_json{{"train", c[0]}, {"val", c[1]}, {"test", c[2]}};
    };
    ordered_json projects = ordered_json::object();
    for (const auto& [name, c] : per_project) projects[name] = counts(c);
    ordered_json j;
    j["dataset"] = dataset;
    j["seed"] = seed;
    j["ratios"] = ratios;
    j["counts"] = {{"dataset", counts(total)}, {"projects", std::move(projects)}};
    j["assignments"] = std::move(list);
    return j;
}

PipelineResult run_pipeline(const PipelineConfig& config) {
    if (config.inputs.empty()) throw ConfigError("no input directories given");
    if (config.variants.empty()) throw ConfigError("no graph variant requested");
    if (config.out_dir.empty()) throw ConfigError("no output directory given");
    if (config.target_bins == 0) throw ConfigError("target histogram needs at least one bin");
    check_ratios(config.ratios);
    const std::set<Variant> variants(config.variants.begin(), config.variants.end());

    const std::vector<SourceFile> files = collect_sources(config);
    std::optional<LabelSet> labels;
    if (config.labels) {
        try {
            labels = ingest_labels(*config.labels);
        } catch (const LabelError& e) {
            throw ConfigError(std::string("label file: ") + e.what());
        }
    }
    std::map<std::string, const LabelRecord*> label_of;
    if (labels) {
        for (const LabelRecord& r : labels->records) label_of[r.path] = &r;
    }

    std::vector<FileResult> results(files.size());
    util::parallel_for(files.size(), config.jobs, [&](std::size_t i) {
        results[i] = process_file(files[i], config, variants, labels.has_value(), label_of.count(files[i].key) > 0);
    });

    std::error_code ec;
    fs::create_directories(config.out_dir, ec);
    if (ec) throw ConfigError("cannot create output directory " + config.out_dir.string() + ": " + ec.message());
    const std::string dataset = config.dataset_name.empty()
                                    ? fs::absolute(config.out_dir).lexically_normal().filename().string()
                                    : config.dataset_name;

    std::vector<std::string> warnings;
    if (labels) warnings.insert(warnings.end(), labels->warnings.begin(), labels->warnings.end());

    // Accepted files, in id order.
    std::vector<std::size_t> accepted;
    ordered_json rejected = ordered_json::array();
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (results[i].rejected) {
            rejected.push_back({{"path", files[i].id}, {"reason", *results[i].rejected}});
        } else {
            accepted.push_back(i);
        }
    }
    if (labels) {
        std::set<std::string> seen;
        for (const SourceFile& f : files) seen.insert(f.key);
        std::size_t unmatched = 0;
        for (const LabelRecord& r : labels->records) unmatched += seen.count(r.path) ? 0 : 1;
        if (unmatched) warnings.push_back(std::to_string(unmatched) + " labelled paths are not among the input files");
    }

    // Targets.
    std::optional<NormalizationParams> params;
    std::vector<std::optional<double>> raw(files.size());
    if (labels) {
        std::vector<double> seconds;
        for (std::size_t i : accepted) {
            raw[i] = label_of.at(files[i].key)->raw_seconds;
            seconds.push_back(*raw[i]);
        }
        if (!seconds.empty()) {
            try {
                auto [targets, fitted] = normalize_targets(seconds, dataset);
                params = fitted;
                for (std::size_t k = 0; k < accepted.size(); ++k) {
                    for (auto& [variant, g] : results[accepted[k]].graphs) g.target = targets[k];
                }
            } catch (const DegenerateRange& e) {
                warnings.push_back(std::string(e.what()) + "; targets left empty");
            }
        }
    }

    // Splits.
    std::optional<std::vector<SplitAssignment>> splits;
    if (!accepted.empty()) {
        std::vector<SplitItem> items;
        for (std::size_t i : accepted) items.push_back(SplitItem{files[i].id, files[i].project});
        try {
            splits = make_splits(std::move(items), config.ratios, config.seed);
        } catch (const std::invalid_argument& e) {
            warnings.push_back(std::string("splits not written: ") + e.what());
        }
    }

    // Graph files.
    std::map<Variant, std::size_t> written;
    for (Variant v : variants) {
        std::vector<ProgramGraph> graphs;
        graphs.reserve(accepted.size());
        for (std::size_t i : accepted) graphs.push_back(results[i].graphs.at(v));
        write_graphs_jsonl(config.out_dir / file_name_of(v), graphs);
        written[v] = graphs.size();
    }
    fs::remove(config.out_dir / "splits.json");
    if (splits) write_json(config.out_dir / "splits.json", splits_to_json(dataset, *splits, config.ratios, config.seed));

    // Statistics.
    std::vector<stats::CorpusGraph> corpus;
    for (std::size_t i : accepted) {
        for (const auto& [variant, g] : results[i].graphs) corpus.push_back({dataset, files[i].project, &g});
    }
    stats::ReportOptions report_options{config.target_bins, config.jobs};
    std::vector<std::string> stat_files;
    if (!corpus.empty()) stat_files = stats::write_csv_reports(corpus, config.out_dir / "stats", report_options);

    // Manifest.
    ordered_json manifest;
    manifest["tool_version"] = kToolVersion;
    manifest["created_at"] = config.timestamp ? ordered_json(utc_timestamp()) : ordered_json(nullptr);
    ordered_json inputs = ordered_json::array();
    for (const fs::path& p : config.inputs) inputs.push_back(fs::absolute(p).lexically_normal().generic_string());
    ordered_json variant_names = ordered_json::array();
    for (Variant v : variants) variant_names.push_back(graph::name_of(v));
    manifest["config"] = {
        {"inputs", std::move(inputs)},
        {"labels", config.labels ? ordered_json(fs::absolute(*config.labels).lexically_normal().generic_string())
                                 : ordered_json(nullptr)},
        {"variants", std::move(variant_names)},
        {"add_inverse", config.add_inverse},
        {"exclude_interfaces", config.exclude_interfaces},
        {"seed", config.seed},
        {"ratios", config.ratios},
        {"target_bins", config.target_bins},
    };

    std::map<std::string, std::size_t> project_counts;
    for (std::size_t i : accepted) ++project_counts[files[i].project];
    std::map<std::string, std::array<std::size_t, 3>> project_splits;
    std::array<std::size_t, 3> split_totals{};
    if (splits) {
        for (const SplitAssignment& a : *splits) {
            ++project_splits[a.project][static_cast<std::size_t>(a.split)];
            ++split_totals[static_cast<std::size_t>(a.split)];
        }
    }
    auto split_json = [&](const std::array<std::size_t, 3>& c) {
        return splits ? ordered_json{{"train", c[0]}, {"val", c[1]}, {"test", c[2]}} : ordered_json(nullptr);
    };
    std::set<std::string> all_projects;
    for (const SourceFile& f : files) all_projects.insert(f.project);
    ordered_json projects = ordered_json::array();
    for (const std::string& p : all_projects) {
        projects.push_back({{"name", p},
                            {"graphs", project_counts.count(p) ? project_counts.at(p) : 0},
                            {"splits", split_json(project_splits[p])}});
    }
    ordered_json counts = {{"files", files.size()}, {"graphs", accepted.size()}, {"rejected", rejected.size()}};
    for (const auto& [v, n] : written) counts[std::string(graph::name_of(v))] = n;
    ordered_json normalization = nullptr;
    if (params) {
        normalization = {{"scheme", "min-max"},
                         {"min_seconds", params->min_seconds},
                         {"max_seconds", params->max_seconds},
                         {"run_aggregation", "mean"}};
    }
    manifest["datasets"] = ordered_json::array({{{"name", dataset},
                                                 {"projects", std::move(projects)},
                                                 {"normalization", std::move(normalization)},
                                                 {"counts", std::move(counts)},
                                                 {"splits", split_json(split_totals)}}});

    ordered_json files_json = ordered_json::object();
    for (const auto& [v, n] : written) files_json[std::string(graph::name_of(v))] = file_name_of(v);
    manifest["files"] = {{"graphs", std::move(files_json)},
                         {"splits", splits ? ordered_json("splits.json") : ordered_json(nullptr)},
                         {"stats", stat_files}};

    ordered_json index = ordered_json::array();
    for (std::size_t k = 0; k < accepted.size(); ++k) {
        const std::size_t i = accepted[k];
        const FileResult& r = results[i];
        const ProgramGraph& any = r.graphs.begin()->second;
        ordered_json entry;
        entry["id"] = files[i].id;
        entry["project"] = files[i].project;
        entry["line"] = k + 1;
        entry["raw_seconds"] = raw[i] ? ordered_json(*raw[i]) : ordered_json(nullptr);
        entry["target"] = any.target ? ordered_json(*any.target) : ordered_json(nullptr);
        entry["nodes"] = any.nodes.size();
        ordered_json edges = ordered_json::object();
        for (const auto& [v, g] : r.graphs) edges[std::string(graph::name_of(v))] = g.edges.size();
        entry["edges"] = std::move(edges);
        std::vector<std::string> notes = r.parse_warnings;
        for (Variant v : {Variant::relsc_h, Variant::relsc_m}) {
            if (auto it = r.graphs.find(v); it != r.graphs.end()) {
                notes.insert(notes.end(), it->second.notes.begin(), it->second.notes.end());
                break;
            }
        }
        entry["notes"] = notes;
        index.push_back(std::move(entry));
    }
    manifest["graphs"] = std::move(index);
    manifest["rejected"] = std::move(rejected);
    manifest["warnings"] = warnings;
    write_json(config.out_dir / "manifest.json", manifest);

    PipelineResult result;
    result.graph_count = accepted.size();
    result.rejected_count = files.size() - accepted.size();
    result.exit_code = accepted.empty() ? 1 : 0;
    result.manifest = std::move(manifest);
    return result;
}

ordered_json resplit(const fs::path& dir, const SplitRatios& ratios, std::uint64_t seed) {
    check_ratios(ratios);
    const fs::path manifest_path = dir / "manifest.json";
    if (!fs::exists(manifest_path)) throw ConfigError("no manifest.json in " + dir.string());
    ordered_json manifest = read_json(manifest_path);
    std::vector<SplitItem> items;
    for (const auto& g : manifest.at("graphs")) items.push_back({g.at("id").get<std::string>(), g.at("project").get<std::string>()});
    const std::string dataset = manifest.at("datasets").at(0).at("name").get<std::string>();
    std::vector<SplitAssignment> splits;
    try {
        splits = make_splits(std::move(items), ratios, seed);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    ordered_json out = splits_to_json(dataset, splits, ratios, seed);
    write_json(dir / "splits.json", out);

    auto& ds = manifest["datasets"][0];
    ds["splits"] = out["counts"]["dataset"];
    for (auto& p : ds["projects"]) {
        const std::string name = p.at("name").get<std::string>();
        p["splits"] = out["counts"]["projects"].contains(name) ? out["counts"]["projects"][name] : ordered_json(nullptr);
    }
    manifest["config"]["seed"] = seed;
    manifest["config"]["ratios"] = ratios;
    manifest["files"]["splits"] = "splits.json";
    write_json(manifest_path, manifest);
    return out;
}

}  // namespace codegraph::dataset
