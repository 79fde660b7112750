#include <cmath>
#include <random>

#include <gtest/gtest.h>
#include <json.hpp>

#include "codegraph/relational/relational.hpp"
#include "codegraph/stats/report.hpp"
#include "codegraph/stats/stats.hpp"
#include "stats_oracle.hpp"
#include "support.hpp"

using namespace codegraph;
using namespace codegraph::graph;
using namespace codegraph::stats;
using namespace testing_support;

namespace {

ProgramGraph undirected_pattern(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
    ProgramGraph g;
    g.variant = Variant::relsc_h;
    for (NodeId i = 0; i < n; ++i) g.nodes.push_back(GraphNode{i, NodeType::Literal, {NodeType::Literal, {}}});
    for (auto [a, b] : edges) g.edges.push_back(Edge{a, b, EdgeType::ast, {}, false});
    return g;
}

ProgramGraph with_size(std::size_t nodes, std::size_t edges) {
    std::vector<std::pair<NodeId, NodeId>> es;
    for (std::size_t i = 0; i < edges; ++i) es.emplace_back(0, 1);
    return undirected_pattern(nodes, es);
}

}  // namespace

TEST(SizeStats, TwoGraphs) {
    const auto a = with_size(10, 3);
    const auto b = with_size(20, 7);
    const std::vector<const ProgramGraph*> gs{&a, &b};
    const auto s = size_stats(gs);
    EXPECT_DOUBLE_EQ(s.nodes.mean, 15);
    EXPECT_DOUBLE_EQ(s.nodes.std, 5);
    EXPECT_DOUBLE_EQ(s.nodes.min, 10);
    EXPECT_DOUBLE_EQ(s.nodes.max, 20);
    EXPECT_DOUBLE_EQ(s.edges.mean, 5);
    EXPECT_DOUBLE_EQ(s.edges.std, 2);
    const std::vector<const ProgramGraph*> one{&a};
    EXPECT_DOUBLE_EQ(size_stats(one).nodes.std, 0);
}

TEST(SizeStats, RandomCorporaAgainstDirectSums) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<ProgramGraph> graphs;
        const int k = std::uniform_int_distribution<int>(1, 10)(rng);
        for (int i = 0; i < k; ++i) graphs.push_back(random_graph(rng, 50));
        std::vector<const ProgramGraph*> ptrs;
        for (const auto& g : graphs) ptrs.push_back(&g);
        const auto s = size_stats(ptrs);
        double mean = 0, sq = 0;
        std::size_t mn = SIZE_MAX, mx = 0;
        for (const auto& g : graphs) {
            mean += g.nodes.size();
            mn = std::min(mn, g.nodes.size());
            mx = std::max(mx, g.nodes.size());
        }
        mean /= k;
        for (const auto& g : graphs) sq += (g.nodes.size() - mean) * (g.nodes.size() - mean);
        EXPECT_NEAR(s.nodes.mean, mean, 1e-9);
        EXPECT_NEAR(s.nodes.std, std::sqrt(sq / k), 1e-9);
        EXPECT_EQ(s.nodes.min, mn);
        EXPECT_EQ(s.nodes.max, mx);
        EXPECT_LE(s.edges.min, s.edges.mean);
        EXPECT_LE(s.edges.mean, s.edges.max);
        EXPECT_GE(s.edges.std, 0.0);
    }
}

TEST(CategoryDistribution, MeanAndStandardError) {
    auto one = undirected_pattern(3, {});
    for (auto& n : one.nodes) n.type = NodeType::IfStatement;
    std::vector<const ProgramGraph*> gs{&one};
    auto d = category_distribution(gs);
    EXPECT_DOUBLE_EQ(d[ordinal(Category::control_flow)].mean, 3);
    EXPECT_DOUBLE_EQ(d[ordinal(Category::control_flow)].standard_error, 0);

    auto two = undirected_pattern(2, {});
    auto four = undirected_pattern(4, {});
    gs = {&two, &four};
    d = category_distribution(gs);
    const auto lit = ordinal(Category::literals_and_constants);
    EXPECT_DOUBLE_EQ(d[lit].mean, 3);
    // Sample std of {2, 4} is sqrt(2); over sqrt(2) gives 1.
    EXPECT_NEAR(d[lit].standard_error, 1.0, 1e-12);
}

TEST(CategoryDistribution, ArithmeticCorpusDominatedByOperations) {
    std::vector<ProgramGraph> graphs;
    for (const std::string body : {"int r = (n * 3 + n / 2) - (n % 5) * (n - 1);",
                                   "int s = n + n * n - n / (n + 1) + (n << 2) - (n >> 1);",
                                   "boolean b = (n > 1 && n < 9) || (n == 4 && !(n != 3));"}) {
        graphs.push_back(relational::build_relsc_m(build_relsc_h(parse_body(body))));
    }
    std::vector<const ProgramGraph*> ptrs;
    for (const auto& g : graphs) ptrs.push_back(&g);
    const auto d = category_distribution(ptrs);
    const auto modal = std::max_element(d.begin(), d.end(), [](auto& a, auto& b) { return a.mean < b.mean; }) - d.begin();
    EXPECT_EQ(static_cast<std::size_t>(modal), ordinal(Category::expressions_and_operations));
}

TEST(StructuralMetrics, PathK4Star) {
    const auto path = structural_metrics(undirected_pattern(3, {{0, 1}, {1, 2}}));
    EXPECT_NEAR(path.density, 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(path.avg_degree, 4.0 / 3.0, 1e-12);
    EXPECT_DOUBLE_EQ(path.clustering, 0);
    EXPECT_DOUBLE_EQ(path.diameter, 2);
    EXPECT_NEAR(path.avg_path_length, 4.0 / 3.0, 1e-12);
    ASSERT_TRUE(path.assortativity.has_value());
    EXPECT_NEAR(*path.assortativity, -1.0, 1e-12);

    const auto k4 = structural_metrics(undirected_pattern(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    EXPECT_DOUBLE_EQ(k4.density, 1);
    EXPECT_DOUBLE_EQ(k4.clustering, 1);
    EXPECT_DOUBLE_EQ(k4.diameter, 1);
    EXPECT_FALSE(k4.assortativity.has_value());  // every endpoint has degree 3

    const auto star = structural_metrics(undirected_pattern(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
    EXPECT_DOUBLE_EQ(star.clustering, 0);
    ASSERT_TRUE(star.assortativity.has_value());
    EXPECT_NEAR(*star.assortativity, -1.0, 1e-12);
}

TEST(StructuralMetrics, DegenerateGraphs) {
    const auto single = structural_metrics(undirected_pattern(1, {}));
    EXPECT_DOUBLE_EQ(single.diameter, 0);
    EXPECT_DOUBLE_EQ(single.avg_path_length, 0);
    EXPECT_FALSE(single.assortativity.has_value());
    const auto empty = structural_metrics(undirected_pattern(0, {}));
    EXPECT_DOUBLE_EQ(empty.density, 0);
}

TEST(StructuralMetrics, ParallelAndReverseEdgesCollapse) {
    const auto g = undirected_pattern(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
    const auto adj = undirected_simple(g);
    EXPECT_EQ(adj[0].size(), 1u);
    EXPECT_EQ(adj[1].size(), 2u);
    EXPECT_NEAR(structural_metrics(g).density, 2.0 / 3.0, 1e-12);
}

TEST(StructuralMetrics, RandomGraphsAgainstBruteForce) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = random_graph(rng, 50);
        const auto got = structural_metrics(g);
        const auto want = oracle_metrics(g);
        EXPECT_NEAR(got.density, want.density, 1e-9);
        EXPECT_NEAR(got.avg_degree, want.avg_degree, 1e-9);
        EXPECT_NEAR(got.clustering, want.clustering, 1e-9);
        EXPECT_EQ(got.diameter, want.diameter);
        EXPECT_NEAR(got.avg_path_length, want.avg_path_length, 1e-9);
        ASSERT_EQ(got.assortativity.has_value(), want.assortativity.has_value()) << trial;
        if (want.assortativity) EXPECT_NEAR(*got.assortativity, *want.assortativity, 1e-9);
    }
}

TEST(DegreeHistogram, Examples) {
    const auto edge = undirected_pattern(2, {{0, 1}});
    std::vector<const ProgramGraph*> gs{&edge};
    EXPECT_EQ(degree_histogram(gs), (std::map<std::size_t, std::size_t>{{1, 2}}));
    const auto path = undirected_pattern(3, {{0, 1}, {1, 2}});
    gs = {&path};
    EXPECT_EQ(degree_histogram(gs), (std::map<std::size_t, std::size_t>{{1, 2}, {2, 1}}));

    const auto fact = build_relsc_h(parse(read_file(std::string(CODEGRAPH_TEST_DATA) + "/factorial.java")));
    gs = {&fact};
    std::size_t total = 0;
    for (const auto& [d, c] : degree_histogram(gs)) total += c;
    EXPECT_EQ(total, fact.nodes.size());
}

TEST(DegreeHistogram, RandomAgainstBruteForce) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<ProgramGraph> graphs;
        const int k = std::uniform_int_distribution<int>(1, 10)(rng);
        for (int i = 0; i < k; ++i) graphs.push_back(random_graph(rng, 50));
        std::vector<const ProgramGraph*> ptrs;
        for (const auto& g : graphs) ptrs.push_back(&g);
        EXPECT_EQ(degree_histogram(ptrs), oracle_degree_histogram(ptrs));
    }
}

TEST(TargetHistogram, Boundaries) {
    EXPECT_EQ(target_histogram(std::vector<double>{0.0, 1.0}, 2).counts, (std::vector<std::size_t>{1, 1}));
    EXPECT_EQ(target_histogram(std::vector<double>{0.5, 0.5, 0.5}, 4).counts, (std::vector<std::size_t>{0, 0, 3, 0}));
    EXPECT_EQ(target_histogram(std::vector<double>{1.0}, 4).counts, (std::vector<std::size_t>{0, 0, 0, 1}));
    EXPECT_EQ(target_histogram(std::vector<double>{0.25}, 4).counts, (std::vector<std::size_t>{0, 1, 0, 0}));
    const auto h = target_histogram(std::vector<double>{0.1, 0.22, 0.3, 0.9}, 10);
    EXPECT_DOUBLE_EQ(h.low_mass, 0.5);
    EXPECT_TRUE(h.skewed);
    EXPECT_FALSE(target_histogram(std::vector<double>{0.1, 0.3, 0.9}, 10).skewed);
}

TEST(TargetHistogram, RandomAgainstCounting) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t bins = std::uniform_int_distribution<std::size_t>(1, 25)(rng);
        std::vector<double> ts(std::uniform_int_distribution<int>(1, 40)(rng));
        for (double& t : ts) t = trial % 5 == 0 ? std::round(u(rng) * bins) / bins : u(rng);
        std::vector<std::size_t> want(bins, 0);
        for (double t : ts) {
            // Bin b covers [b/bins, (b+1)/bins), the last one also takes 1.0.
            for (std::size_t b = 0; b < bins; ++b) {
                const double lo = double(b) / bins, hi = double(b + 1) / bins;
                if ((t >= lo && t < hi) || (b + 1 == bins && t == 1.0)) {
                    ++want[b];
                    break;
                }
            }
        }
        EXPECT_EQ(target_histogram(ts, bins).counts, want);
    }
}

TEST(MeanRelationMatrix, AveragesHistograms) {
    const auto a = relational::build_relsc_m(build_relsc_h(parse_body("a();")), false);
    const auto b = relational::build_relsc_m(build_relsc_h(parse_body("a(); b(); c();")), false);
    std::vector<const ProgramGraph*> gs{&a, &b};
    const auto mean = mean_relation_matrix(gs);
    const auto ha = relational::relation_histogram(a);
    const auto hb = relational::relation_histogram(b);
    for (std::size_t i = 0; i < kCategoryCount; ++i) {
        for (std::size_t j = 0; j < kCategoryCount; ++j) EXPECT_DOUBLE_EQ(mean[i][j], (ha[i][j] + hb[i][j]) / 2.0);
    }
}

TEST(Report, JsonAndCsv) {
    const auto h1 = build_relsc_h(parse_body("while (c) { a(); }"));
    auto h2 = build_relsc_h(parse_body("if (c) a(); else b();"));
    h2.target = 0.1;
    const auto m1 = relational::build_relsc_m(h1);
    std::vector<CorpusGraph> corpus{{"ds", "p", &h1}, {"ds", "q", &h2}, {"ds", "p", &m1}};
    const auto j = corpus_report(corpus, {});
    EXPECT_TRUE(j.contains("metadata"));
    const auto dir = temp_dir("report");
    const auto files = write_csv_reports(corpus, dir, {});
    EXPECT_EQ(files.size(), 8u);
    const auto size = read_file(dir / "size_stats.csv");
    EXPECT_EQ(size.substr(0, size.find('\n')),
              "group,variant,graphs,nodes_mean,nodes_std,nodes_min,nodes_max,edges_mean,edges_std,edges_min,edges_max");
    EXPECT_NE(size.find("ds,relsc_h,2,"), std::string::npos);
    EXPECT_NE(size.find("ds/p,relsc_m,1,"), std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST(MeanRelationMatrix, OperationsAndLiteralsDominate) {
    std::vector<ProgramGraph> graphs;
    graphs.push_back(relational::build_relsc_m(
        build_relsc_h(parse(read_file(std::string(CODEGRAPH_TEST_DATA) + "/broad_constructs.java")))));
    graphs.push_back(relational::build_relsc_m(
        build_relsc_h(parse(read_file(std::string(CODEGRAPH_TEST_DATA) + "/factorial.java")))));
    std::vector<const ProgramGraph*> ptrs;
    for (const auto& g : graphs) ptrs.push_back(&g);
    const auto mean = mean_relation_matrix(ptrs);
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < kCategoryCount; ++i) {
        for (std::size_t j = 0; j < kCategoryCount; ++j) {
            if (mean[i][j] > mean[bi][bj]) bi = i, bj = j;
        }
    }
    const auto ops = ordinal(Category::expressions_and_operations);
    const auto lit = ordinal(Category::literals_and_constants);
    EXPECT_TRUE(bi == ops || bi == lit || bj == ops || bj == lit) << bi << "," << bj;
}
