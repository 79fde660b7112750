#pragma once

// Brute-force reference computations for the statistics module. Everything
// here works from an adjacency matrix and textbook definitions.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "codegraph/graph/program_graph.hpp"

namespace testing_support {

struct OracleMetrics {
    double density = 0, avg_degree = 0, clustering = 0, diameter = 0, avg_path_length = 0;
    std::optional<double> assortativity;
};

inline std::vector<std::vector<int>> adjacency(const codegraph::graph::ProgramGraph& g) {
    const std::size_t n = g.nodes.size();
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (const auto& e : g.edges) {
        if (e.src != e.dst) a[e.src][e.dst] = a[e.dst][e.src] = 1;
    }
    return a;
}

inline OracleMetrics oracle_metrics(const codegraph::graph::ProgramGraph& g) {
    OracleMetrics m;
    const auto a = adjacency(g);
    const std::size_t n = a.size();
    if (n == 0) return m;
    std::vector<int> deg(n, 0);
    int edges = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) deg[i] += a[i][j];
        for (std::size_t j = i + 1; j < n; ++j) edges += a[i][j];
    }
    m.avg_degree = 2.0 * edges / n;
    m.density = n > 1 ? 2.0 * edges / (double(n) * (n - 1)) : 0.0;

    double csum = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (deg[v] < 2) continue;
        int tri = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) tri += a[v][i] && a[v][j] && a[i][j];
        }
        csum += tri / (deg[v] * (deg[v] - 1) / 2.0);
    }
    m.clustering = csum / n;

    const int inf = std::numeric_limits<int>::max() / 4;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (std::size_t i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (a[i][j]) d[i][j] = 1;
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        }
    }
    // Largest component by reachability; first-seen wins ties.
    std::size_t best = 0, best_size = 0;
    for (std::size_t s = 0; s < n; ++s) {
        std::size_t size = 0;
        for (std::size_t t = 0; t < n; ++t) size += d[s][t] < inf;
        if (size > best_size) {
            best_size = size;
            best = s;
        }
    }
    if (best_size >= 2) {
        double total = 0;
        int diam = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j && d[best][i] < inf && d[best][j] < inf) {
                    total += d[i][j];
                    diam = std::max(diam, d[i][j]);
                }
            }
        }
        m.diameter = diam;
        m.avg_path_length = total / (double(best_size) * (best_size - 1));
    }

    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (a[i][j]) {
                xs.push_back(deg[i]);
                ys.push_back(deg[j]);
            }
        }
    }
    if (!xs.empty()) {
        double mx = 0, my = 0;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            mx += xs[k];
            my += ys[k];
        }
        mx /= xs.size();
        my /= ys.size();
        double cov = 0, vx = 0, vy = 0;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            cov += (xs[k] - mx) * (ys[k] - my);
            vx += (xs[k] - mx) * (xs[k] - mx);
            vy += (ys[k] - my) * (ys[k] - my);
        }
        if (vx > 0 && vy > 0) m.assortativity = cov / std::sqrt(vx * vy);
    }
    return m;
}

inline std::map<std::size_t, std::size_t> oracle_degree_histogram(
    const std::vector<const codegraph::graph::ProgramGraph*>& graphs) {
    std::map<std::size_t, std::size_t> h;
    for (const auto* g : graphs) {
        for (const auto& n : g->nodes) {
            std::size_t d = 0;
            for (const auto& e : g->edges) d += (e.src == n.id) + (e.dst == n.id);
            ++h[d];
        }
    }
    return h;
}

// Random multigraph with up to `max_nodes` nodes; parallel edges allowed, no self-loops.
inline codegraph::graph::ProgramGraph random_graph(std::mt19937_64& rng, std::size_t max_nodes) {
    using namespace codegraph;
    graph::ProgramGraph g;
    g.variant = graph::Variant::relsc_h;
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_nodes)(rng);
    for (std::size_t i = 0; i < n; ++i) {
        const auto t = static_cast<NodeType>(std::uniform_int_distribution<int>(0, kNodeTypeCount - 1)(rng));
        g.nodes.push_back(graph::GraphNode{static_cast<graph::NodeId>(i), t, {t, {}}});
    }
    if (n < 2) return g;
    const double p = std::uniform_real_distribution<double>(0.0, 0.3)(rng);
    std::uniform_int_distribution<int> type(0, graph::kEdgeTypeCount - 1);
    std::bernoulli_distribution coin(p);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            while (coin(rng)) {
                g.edges.push_back(graph::Edge{static_cast<graph::NodeId>(i), static_cast<graph::NodeId>(j),
                                              static_cast<graph::EdgeType>(type(rng)), {}, false});
            }
        }
    }
    return g;
}

}  // namespace testing_support
