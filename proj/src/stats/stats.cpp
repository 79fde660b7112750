#include "codegraph/stats/stats.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace codegraph::stats {

using graph::NodeId;
using graph::ProgramGraph;

Summary summarize(std::span<const double> values) {
    Summary s;
    s.n = values.size();
    if (values.empty()) return s;
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    s.min = *lo;
    s.max = *hi;
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(s.n);
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(sq / static_cast<double>(s.n));
    return s;
}

SizeStats size_stats(std::span<const ProgramGraph* const> graphs) {
    std::vector<double> nodes;
    std::vector<double> edges;
    for (const ProgramGraph* g : graphs) {
        nodes.push_back(static_cast<double>(g->nodes.size()));
        edges.push_back(static_cast<double>(g->edges.size()));
    }
    return {summarize(nodes), summarize(edges)};
}

std::array<std::size_t, kCategoryCount> category_counts(const ProgramGraph& g) {
    std::array<std::size_t, kCategoryCount> counts{};
    for (const graph::GraphNode& n : g.nodes) ++counts[ordinal(categorize(n.type))];
    return counts;
}

std::array<MeanWithError, kCategoryCount> category_distribution(std::span<const ProgramGraph* const> graphs) {
    std::array<MeanWithError, kCategoryCount> out{};
    const std::size_t n = graphs.size();
    if (n == 0) return out;
    std::vector<std::array<std::size_t, kCategoryCount>> per_graph;
    for (const ProgramGraph* g : graphs) per_graph.push_back(category_counts(*g));
    for (std::size_t c = 0; c < kCategoryCount; ++c) {
        double sum = 0.0;
        for (const auto& counts : per_graph) sum += static_cast<double>(counts[c]);
        const double mean = sum / static_cast<double>(n);
        double sq = 0.0;
        for (const auto& counts : per_graph) sq += (static_cast<double>(counts[c]) - mean) * (static_cast<double>(counts[c]) - mean);
        const double se = n > 1 ? std::sqrt(sq / static_cast<double>(n - 1)) / std::sqrt(static_cast<double>(n)) : 0.0;
        out[c] = {mean, se};
    }
    return out;
}

std::vector<std::vector<NodeId>> undirected_simple(const ProgramGraph& g) {
    std::vector<std::vector<NodeId>> adj(g.nodes.size());
    for (const graph::Edge& e : g.edges) {
        if (e.src == e.dst) continue;
        adj[e.src].push_back(e.dst);
        adj[e.dst].push_back(e.src);
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return adj;
}

StructuralMetrics structural_metrics(const ProgramGraph& g) {
    StructuralMetrics m;
    const auto adj = undirected_simple(g);
    const std::size_t n = adj.size();
    if (n == 0) return m;

    std::size_t twice_m = 0;
    for (const auto& a : adj) twice_m += a.size();
    const double edges = static_cast<double>(twice_m) / 2.0;
    m.avg_degree = static_cast<double>(twice_m) / static_cast<double>(n);
    m.density = n > 1 ? 2.0 * edges / (static_cast<double>(n) * static_cast<double>(n - 1)) : 0.0;

    // Average local clustering; nodes of degree < 2 count as 0.
    std::vector<char> mark(n, 0);
    double clustering_sum = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t d = adj[v].size();
        if (d < 2) continue;
        for (NodeId u : adj[v]) mark[u] = 1;
        std::size_t links = 0;
        for (NodeId u : adj[v]) {
            for (NodeId w : adj[u]) links += mark[w];
        }
        for (NodeId u : adj[v]) mark[u] = 0;
        clustering_sum += static_cast<double>(links) / static_cast<double>(d * (d - 1));  // links counts each pair twice
    }
    m.clustering = clustering_sum / static_cast<double>(n);

    // Largest component; ties go to the one containing the smallest node id.
    std::vector<std::size_t> comp(n, SIZE_MAX);
    std::size_t best = 0;
    std::size_t best_size = 0;
    std::size_t comp_count = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != SIZE_MAX) continue;
        std::size_t size = 0;
        std::deque<NodeId> queue{static_cast<NodeId>(s)};
        comp[s] = comp_count;
        while (!queue.empty()) {
            const NodeId v = queue.front();
            queue.pop_front();
            ++size;
            for (NodeId u : adj[v]) {
                if (comp[u] == SIZE_MAX) {
                    comp[u] = comp_count;
                    queue.push_back(u);
                }
            }
        }
        if (size > best_size) {
            best_size = size;
            best = comp_count;
        }
        ++comp_count;
    }
    if (best_size >= 2) {
        std::vector<std::size_t> dist(n);
        std::size_t diameter = 0;
        double total = 0.0;
        std::vector<NodeId> queue;
        queue.reserve(best_size);
        for (std::size_t s = 0; s < n; ++s) {
            if (comp[s] != best) continue;
            std::fill(dist.begin(), dist.end(), SIZE_MAX);
            dist[s] = 0;
            queue.clear();
            queue.push_back(static_cast<NodeId>(s));
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const NodeId v = queue[head];
                for (NodeId u : adj[v]) {
                    if (dist[u] == SIZE_MAX) {
                        dist[u] = dist[v] + 1;
                        total += static_cast<double>(dist[u]);
                        diameter = std::max(diameter, dist[u]);
                        queue.push_back(u);
                    }
                }
            }
        }
        m.diameter = static_cast<double>(diameter);
        m.avg_path_length = total / (static_cast<double>(best_size) * static_cast<double>(best_size - 1));
    }

    // Degree assortativity: Pearson correlation of endpoint degrees over both
    // orientations of every edge.
    if (twice_m > 0) {
        double sx = 0.0;
        double sxx = 0.0;
        double sxy = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            const double dv = static_cast<double>(adj[v].size());
            for (NodeId u : adj[v]) {
                const double du = static_cast<double>(adj[u].size());
                sx += dv;
                sxx += dv * dv;
                sxy += dv * du;
            }
        }
        const double count = static_cast<double>(twice_m);
        const double mean = sx / count;
        const double var = sxx / count - mean * mean;
        if (var > 1e-12 * std::max(1.0, mean * mean)) m.assortativity = (sxy / count - mean * mean) / var;
    }
    return m;
}

std::map<std::size_t, std::size_t> degree_histogram(std::span<const ProgramGraph* const> graphs) {
    std::map<std::size_t, std::size_t> hist;
    for (const ProgramGraph* g : graphs) {
        std::vector<std::size_t> degree(g->nodes.size(), 0);
        for (const graph::Edge& e : g->edges) {
            ++degree[e.src];
            ++degree[e.dst];
        }
        for (std::size_t d : degree) ++hist[d];
    }
    return hist;
}

TargetHistogram target_histogram(std::span<const double> targets, std::size_t bins) {
    TargetHistogram h;
    h.counts.assign(std::max<std::size_t>(bins, 1), 0);
    std::size_t low = 0;
    for (double t : targets) {
        const double x = std::clamp(t, 0.0, 1.0);
        auto bin = static_cast<std::size_t>(std::floor(x * static_cast<double>(h.counts.size())));
        bin = std::min(bin, h.counts.size() - 1);
        ++h.counts[bin];
        if (x <= 0.22) ++low;
    }
    if (!targets.empty()) {
        h.low_mass = static_cast<double>(low) / static_cast<double>(targets.size());
        h.skewed = 2 * low >= targets.size();
    }
    return h;
}

MeanRelationMatrix mean_relation_matrix(std::span<const ProgramGraph* const> graphs) {
    MeanRelationMatrix mean{};
    if (graphs.empty()) return mean;
    for (const ProgramGraph* g : graphs) {
        const auto cells = relational::relation_histogram(*g);
        for (std::size_t i = 0; i < kCategoryCount; ++i) {
            for (std::size_t j = 0; j < kCategoryCount; ++j) mean[i][j] += static_cast<double>(cells[i][j]);
        }
    }
    for (auto& row : mean) {
        for (double& v : row) v /= static_cast<double>(graphs.size());
    }
    return mean;
}

}  // namespace codegraph::stats
