#include "codegraph/stats/report.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <unordered_map>

#include "codegraph/stats/stats.hpp"
#include "codegraph/util/parallel.hpp"

namespace codegraph::stats {
namespace {

using graph::ProgramGraph;
using graph::Variant;
using nlohmann::ordered_json;

constexpr std::string_view kGraphView = "undirected_simple";
constexpr std::array<std::string_view, 6> kMetricNames{"density",  "avg_degree",      "clustering",
                                                       "diameter", "avg_path_length", "assortativity"};

std::string fmt(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc() ? std::string(buf, end) : std::string("nan");
}

struct Group {
    std::string key;
    std::map<Variant, std::vector<const ProgramGraph*>> by_variant;

    // Node categories and targets do not depend on the variant.
    [[nodiscard]] const std::vector<const ProgramGraph*>* representative() const {
        for (Variant v : {Variant::relsc_m, Variant::relsc_h, Variant::ast_only}) {
            auto it = by_variant.find(v);
            if (it != by_variant.end()) return &it->second;
        }
        return nullptr;
    }
};

struct MetricSummary {
    std::array<Summary, 6> metrics;
    std::size_t assortativity_undefined = 0;
};

class Aggregate {
public:
    Aggregate(std::span<const CorpusGraph> corpus, const ReportOptions& options) : options_(options) {
        std::map<std::string, Group> groups;
        for (const CorpusGraph& cg : corpus) {
            groups[cg.dataset].by_variant[cg.graph->variant].push_back(cg.graph);
            groups[cg.dataset + "/" + cg.project].by_variant[cg.graph->variant].push_back(cg.graph);
        }
        for (auto& [key, group] : groups) {
            group.key = key;
            groups_.push_back(std::move(group));
        }
        std::vector<const ProgramGraph*> all;
        for (const CorpusGraph& cg : corpus) all.push_back(cg.graph);
        per_graph_.resize(all.size());
        util::parallel_for(all.size(), options.jobs, [&](std::size_t i) { per_graph_[i] = structural_metrics(*all[i]); });
        for (std::size_t i = 0; i < all.size(); ++i) index_[all[i]] = i;
        corpus_ = corpus;
    }

    [[nodiscard]] const std::vector<Group>& groups() const { return groups_; }
    [[nodiscard]] const StructuralMetrics& metrics(const ProgramGraph* g) const { return per_graph_[index_.at(g)]; }
    [[nodiscard]] std::span<const CorpusGraph> corpus() const { return corpus_; }
    [[nodiscard]] const ReportOptions& options() const { return options_; }

    [[nodiscard]] MetricSummary summarize_metrics(const std::vector<const ProgramGraph*>& graphs) const {
        std::array<std::vector<double>, 6> values;
        MetricSummary out;
        for (const ProgramGraph* g : graphs) {
            const StructuralMetrics& m = metrics(g);
            values[0].push_back(m.density);
            values[1].push_back(m.avg_degree);
            values[2].push_back(m.clustering);
            values[3].push_back(m.diameter);
            values[4].push_back(m.avg_path_length);
            if (m.assortativity) {
                values[5].push_back(*m.assortativity);
            } else {
                ++out.assortativity_undefined;
            }
        }
        for (std::size_t i = 0; i < values.size(); ++i) out.metrics[i] = summarize(values[i]);
        return out;
    }

    static std::vector<double> targets(const std::vector<const ProgramGraph*>& graphs) {
        std::vector<double> t;
        for (const ProgramGraph* g : graphs) {
            if (g->target) t.push_back(*g->target);
        }
        return t;
    }

private:
    ReportOptions options_;
    std::vector<Group> groups_;
    std::vector<StructuralMetrics> per_graph_;
    std::unordered_map<const ProgramGraph*, std::size_t> index_;
    std::span<const CorpusGraph> corpus_;
};

ordered_json summary_json(const Summary& s) {
    return ordered_json{{"n", s.n}, {"mean", s.mean}, {"std", s.std}, {"min", s.min}, {"max", s.max}};
}

std::ofstream open_csv(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

}  // namespace

ordered_json corpus_report(std::span<const CorpusGraph> corpus, const ReportOptions& options) {
    const Aggregate agg(corpus, options);
    ordered_json report;
    report["metadata"] = {
        {"size_std_divisor", "n"},
        {"standard_error_std_divisor", "n-1"},
        {"structural_graph_view", kGraphView},
        {"path_metrics_scope", "largest_connected_component"},
        {"target_bins", options.target_bins},
        {"target_bin_rule", "half-open [lo,hi), last bin closed"},
    };
    ordered_json groups = ordered_json::array();
    for (const Group& group : agg.groups()) {
        ordered_json gj;
        gj["group"] = group.key;
        ordered_json variants = ordered_json::object();
        for (const auto& [variant, graphs] : group.by_variant) {
            ordered_json vj;
            const SizeStats sizes = size_stats(graphs);
            vj["graphs"] = graphs.size();
            vj["nodes"] = summary_json(sizes.nodes);
            vj["edges"] = summary_json(sizes.edges);
            const MetricSummary ms = agg.summarize_metrics(graphs);
            ordered_json metrics;
            for (std::size_t i = 0; i < kMetricNames.size(); ++i) metrics[std::string(kMetricNames[i])] = summary_json(ms.metrics[i]);
            metrics["assortativity_undefined"] = ms.assortativity_undefined;
            vj["structural"] = std::move(metrics);
            ordered_json degrees = ordered_json::array();
            for (const auto& [degree, count] : degree_histogram(graphs)) degrees.push_back({degree, count});
            vj["degree_histogram"] = std::move(degrees);
            if (variant == Variant::relsc_m) {
                const MeanRelationMatrix matrix = mean_relation_matrix(graphs);
                ordered_json rows = ordered_json::array();
                for (const auto& row : matrix) rows.push_back(row);
                vj["mean_relation_matrix"] = std::move(rows);
            }
            variants[std::string(graph::name_of(variant))] = std::move(vj);
        }
        gj["variants"] = std::move(variants);
        if (const auto* rep = group.representative()) {
            ordered_json cats = ordered_json::object();
            const auto dist = category_distribution(*rep);
            for (std::size_t c = 0; c < kCategoryCount; ++c) {
                cats[std::string(name_of(static_cast<Category>(c)))] = {{"mean", dist[c].mean},
                                                                        {"standard_error", dist[c].standard_error}};
            }
            gj["category_distribution"] = std::move(cats);
            const std::vector<double> targets = Aggregate::targets(*rep);
            const TargetHistogram th = target_histogram(targets, options.target_bins);
            gj["targets"] = {{"count", targets.size()},
                             {"histogram", th.counts},
                             {"low_mass_0_22", th.low_mass},
                             {"skewed", th.skewed}};
        }
        groups.push_back(std::move(gj));
    }
    report["groups"] = std::move(groups);
    return report;
}

std::vector<std::string> write_csv_reports(std::span<const CorpusGraph> corpus, const std::filesystem::path& dir,
                                           const ReportOptions& options) {
    const Aggregate agg(corpus, options);
    std::filesystem::create_directories(dir);
    std::vector<std::string> written;
    auto open = [&](const std::string& name) {
        written.push_back(name);
        return open_csv(dir / name);
    };

    {
        auto out = open("size_stats.csv");
        out << "group,variant,graphs,nodes_mean,nodes_std,nodes_min,nodes_max,edges_mean,edges_std,edges_min,edges_max\n";
        for (const Group& group : agg.groups()) {
            for (const auto& [variant, graphs] : group.by_variant) {
                const SizeStats s = size_stats(graphs);
                out << group.key << ',' << graph::name_of(variant) << ',' << graphs.size() << ',' << fmt(s.nodes.mean)
                    << ',' << fmt(s.nodes.std) << ',' << fmt(s.nodes.min) << ',' << fmt(s.nodes.max) << ','
                    << fmt(s.edges.mean) << ',' << fmt(s.edges.std) << ',' << fmt(s.edges.min) << ','
                    << fmt(s.edges.max) << '\n';
            }
        }
    }
    {
        auto out = open("category_distribution.csv");
        out << "group,category,mean,standard_error\n";
        for (const Group& group : agg.groups()) {
            const auto* rep = group.representative();
            if (!rep) continue;
            const auto dist = category_distribution(*rep);
            for (std::size_t c = 0; c < kCategoryCount; ++c) {
                out << group.key << ',' << name_of(static_cast<Category>(c)) << ',' << fmt(dist[c].mean) << ','
                    << fmt(dist[c].standard_error) << '\n';
            }
        }
    }
    {
        auto out = open("relation_matrix.csv");
        out << "group,src_category,dst_category,mean_count\n";
        for (const Group& group : agg.groups()) {
            auto it = group.by_variant.find(Variant::relsc_m);
            if (it == group.by_variant.end()) continue;
            const MeanRelationMatrix m = mean_relation_matrix(it->second);
            for (std::size_t i = 0; i < kCategoryCount; ++i) {
                for (std::size_t j = 0; j < kCategoryCount; ++j) {
                    out << group.key << ',' << name_of(static_cast<Category>(i)) << ','
                        << name_of(static_cast<Category>(j)) << ',' << fmt(m[i][j]) << '\n';
                }
            }
        }
    }
    {
        auto out = open("structural_metrics.csv");
        out << "group,variant,graph_view,metric,graphs,mean,std,min,max\n";
        for (const Group& group : agg.groups()) {
            for (const auto& [variant, graphs] : group.by_variant) {
                const MetricSummary ms = agg.summarize_metrics(graphs);
                for (std::size_t i = 0; i < kMetricNames.size(); ++i) {
                    const Summary& s = ms.metrics[i];
                    out << group.key << ',' << graph::name_of(variant) << ',' << kGraphView << ',' << kMetricNames[i]
                        << ',' << s.n << ',' << fmt(s.mean) << ',' << fmt(s.std) << ',' << fmt(s.min) << ','
                        << fmt(s.max) << '\n';
                }
            }
        }
    }
    {
        auto out = open("structural_metrics_per_graph.csv");
        out << "graph_id,variant,graph_view,nodes,edges,density,avg_degree,clustering,diameter,avg_path_length,assortativity\n";
        for (const CorpusGraph& cg : agg.corpus()) {
            const StructuralMetrics& m = agg.metrics(cg.graph);
            out << cg.graph->id << ',' << graph::name_of(cg.graph->variant) << ',' << kGraphView << ','
                << cg.graph->nodes.size() << ',' << cg.graph->edges.size() << ',' << fmt(m.density) << ','
                << fmt(m.avg_degree) << ',' << fmt(m.clustering) << ',' << fmt(m.diameter) << ','
                << fmt(m.avg_path_length) << ',' << (m.assortativity ? fmt(*m.assortativity) : std::string()) << '\n';
        }
    }
    {
        auto out = open("degree_histogram.csv");
        out << "group,variant,degree,count\n";
        for (const Group& group : agg.groups()) {
            for (const auto& [variant, graphs] : group.by_variant) {
                for (const auto& [degree, count] : degree_histogram(graphs)) {
                    out << group.key << ',' << graph::name_of(variant) << ',' << degree << ',' << count << '\n';
                }
            }
        }
    }
    {
        auto hist = open("target_histogram.csv");
        hist << "group,bin,lo,hi,count\n";
        auto summary = open("target_summary.csv");
        summary << "group,targets,low_mass_0_22,skewed\n";
        for (const Group& group : agg.groups()) {
            const auto* rep = group.representative();
            if (!rep) continue;
            const std::vector<double> targets = Aggregate::targets(*rep);
            const TargetHistogram th = target_histogram(targets, options.target_bins);
            const auto bins = static_cast<double>(th.counts.size());
            for (std::size_t b = 0; b < th.counts.size(); ++b) {
                hist << group.key << ',' << b << ',' << fmt(static_cast<double>(b) / bins) << ',' << fmt(static_cast<double>(b + 1) / bins) << ','
                     << th.counts[b] << '\n';
            }
            summary << group.key << ',' << targets.size() << ',' << fmt(th.low_mass) << ','
                    << (th.skewed ? "true" : "false") << '\n';
        }
    }
    return written;
}

}  // namespace codegraph::stats
