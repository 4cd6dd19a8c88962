// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include <netaural/centrality.hpp>
#include <netaural/datasets.hpp>
#include <netaural/generators.hpp>

#include "oracles.hpp"

using namespace netaural;

namespace {

double residual(const Graph& g, const std::vector<double>& x) {
    const auto a = oracle::adjacency(g);
    const std::size_t n = x.size();
    std::vector<double> ax(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) ax[i] += a[i][j] * x[j];
    }
    const double lambda = std::inner_product(x.begin(), x.end(), ax.begin(), 0.0);
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) r += (ax[i] - lambda * x[i]) * (ax[i] - lambda * x[i]);
    return std::sqrt(r);
}

} // namespace

TEST(Degree, Examples) {
    EXPECT_EQ(degree_centrality(oracle::star_graph(4)).values, (std::vector<double>{3, 1, 1, 1}));
    EXPECT_EQ(degree_centrality(oracle::cycle_graph(10)).values, std::vector<double>(10, 2.0));
    EXPECT_EQ(degree_centrality(Graph(3, std::vector<Edge>{})).values, std::vector<double>(3, 0.0));
}

TEST(Degree, SumsToTwiceEdges) {
    std::mt19937_64 rng(2);
    const Graph g = oracle::random_graph(40, 0.2, rng);
    const auto d = degree_centrality(g).values;
    EXPECT_EQ(std::accumulate(d.begin(), d.end(), 0.0), 2.0 * g.num_edges());
}

TEST(Closeness, Examples) {
    const auto star = closeness_centrality(oracle::star_graph(4)).values;
    EXPECT_NEAR(star[0], 1.0, 1e-15);
    EXPECT_NEAR(star[1], 0.6, 1e-15);
    for (double x : closeness_centrality(oracle::complete_graph(5)).values) EXPECT_NEAR(x, 1.0, 1e-15);
    const std::vector<Edge> e{{0, 1}};
    EXPECT_EQ(closeness_centrality(Graph(3, e)).values[2], 0.0);
}

TEST(Closeness, MatchesFloydWarshall) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = oracle::random_graph(5 + trial % 20, 0.15, rng);
        const auto got = closeness_centrality(g).values;
        const auto want = oracle::closeness(g);
        for (std::size_t v = 0; v < got.size(); ++v) {
            EXPECT_NEAR(got[v], want[v], 1e-12);
            if (g.degree(static_cast<NodeId>(v)) > 0) {
                EXPECT_GT(got[v], 0.0);
                EXPECT_LE(got[v], 1.0);
            }
        }
    }
}

TEST(Betweenness, Examples) {
    const auto p3 = betweenness_centrality(oracle::path_graph(3)).values;
    EXPECT_NEAR(p3[1], 1.0, 1e-15);
    EXPECT_EQ(p3[0], 0.0);
    const auto star = betweenness_centrality(oracle::star_graph(4)).values;
    EXPECT_NEAR(star[0], 1.0, 1e-15);
    EXPECT_EQ(star[3], 0.0);
    for (double x : betweenness_centrality(oracle::cycle_graph(4)).values) EXPECT_NEAR(x, 1.0 / 6.0, 1e-15);
}

TEST(Betweenness, NaiveOracleExamples) {
    EXPECT_EQ(naive_betweenness_oracle(oracle::path_graph(3)).values, (std::vector<double>{0, 1, 0}));
    EXPECT_EQ(naive_betweenness_oracle(oracle::complete_graph(4)).values, std::vector<double>(4, 0.0));
    EXPECT_THROW(naive_betweenness_oracle(oracle::path_graph(13)), std::invalid_argument);
}

TEST(Betweenness, ThreeWayAgreement) {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_graph(2 + trial % 9, 0.35, rng);
        const auto brandes = betweenness_centrality(g).values;
        const auto naive = naive_betweenness_oracle(g).values;
        const auto counted = oracle::betweenness(g);
        for (std::size_t v = 0; v < brandes.size(); ++v) {
            ASSERT_NEAR(brandes[v], naive[v], 1e-12);
            ASSERT_NEAR(brandes[v], counted[v], 1e-12);
            ASSERT_GE(brandes[v], 0.0);
            ASSERT_LE(brandes[v], 1.0);
        }
    }
}

TEST(Betweenness, LargerGraphsMatchPathCounting) {
    Rng rng(3);
    for (auto kind : all_models()) {
        const Graph g = giant_component(generate(sample_model(kind, 60, rng), rng.next_u64()));
        const auto got = betweenness_centrality(g).values;
        const auto want = oracle::betweenness(g);
        for (std::size_t v = 0; v < got.size(); ++v) ASSERT_NEAR(got[v], want[v], 1e-12);
    }
}

TEST(Eigenvector, Examples) {
    for (double x : eigenvector_centrality(oracle::complete_graph(5)).values) EXPECT_NEAR(x, 1 / std::sqrt(5.0), 1e-9);
    for (double x : eigenvector_centrality(oracle::cycle_graph(8)).values) EXPECT_NEAR(x, 1 / std::sqrt(8.0), 1e-9);
    const auto p3 = eigenvector_centrality(oracle::path_graph(3)).values;
    EXPECT_NEAR(p3[0], 0.5, 1e-9);
    EXPECT_NEAR(p3[1], 1 / std::sqrt(2.0), 1e-9);
    EXPECT_NEAR(p3[2], 0.5, 1e-9);
}

TEST(Eigenvector, EmptyGraphErrors) {
    EXPECT_THROW(eigenvector_centrality(Graph(3, std::vector<Edge>{})), ConvergenceError);
}

TEST(Eigenvector, ResidualOnConnectedGraphs) {
    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const auto kind = all_models()[static_cast<std::size_t>(trial) % all_models().size()];
        const Graph g = giant_component(generate(sample_model(kind, 40, rng), rng.next_u64()));
        const auto x = eigenvector_centrality(g).values;
        EXPECT_LE(residual(g, x), 1e-8) << model_name(kind);
        double norm = 0.0;
        for (double v : x) {
            EXPECT_GE(v, 0.0);
            norm += v * v;
        }
        EXPECT_NEAR(norm, 1.0, 1e-12);
    }
    // Bipartite graphs are handled by the shift.
    EXPECT_LE(residual(bundled_graph("davis").graph, eigenvector_centrality(bundled_graph("davis").graph).values),
              1e-8);
}

TEST(Centrality, PermutationEquivariance) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = giant_component(oracle::random_graph(25, 0.2, rng));
        const auto perm = oracle::random_permutation(g.num_nodes(), rng);
        const Graph gp = permute(g, perm);
        for (auto m : target_measures()) {
            const auto a = compute_centrality(g, m).values;
            const auto b = compute_centrality(gp, m).values;
            for (NodeId v = 0; v < g.num_nodes(); ++v) ASSERT_NEAR(b[perm[v]], a[v], 1e-12) << measure_name(m);
        }
    }
}

TEST(Centrality, NamesAndCsv) {
    for (auto m : target_measures()) EXPECT_EQ(parse_measure(measure_name(m)), m);
    EXPECT_FALSE(parse_measure("pagerank"));
    EXPECT_EQ(measure_short_name(Measure::Eigenvector), "EC");
    const auto csv = centrality_csv(degree_centrality(oracle::path_graph(2)), {"a", "b"});
    EXPECT_EQ(csv, "node_id,label,measure,value\n0,a,degree,1\n1,b,degree,1\n");
    EXPECT_THROW(compute_centrality(oracle::path_graph(3), Measure::Predicted), std::invalid_argument);
}
