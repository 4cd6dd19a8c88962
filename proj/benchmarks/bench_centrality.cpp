// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <netaural/centrality.hpp>
#include <netaural/generators.hpp>

using namespace netaural;

static void BM_Brandes(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Graph g = giant_component(gen_er(n, 6.0 / static_cast<double>(n - 1), 3));
    for (auto _ : state) benchmark::DoNotOptimize(betweenness_centrality(g));
}
BENCHMARK(BM_Brandes)->Arg(150)->Arg(1500)->Unit(benchmark::kMillisecond);

static void BM_Eigenvector(benchmark::State& state) {
    const Graph g = gen_ba(static_cast<std::size_t>(state.range(0)), 2, 4);
    for (auto _ : state) benchmark::DoNotOptimize(eigenvector_centrality(g));
}
BENCHMARK(BM_Eigenvector)->Arg(1500)->Unit(benchmark::kMillisecond);
