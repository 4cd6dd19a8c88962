// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <netaural/auralize.hpp>
#include <netaural/generators.hpp>

using namespace netaural;

static void BM_AuralizeER(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Graph g = gen_er(n, 8.0 / static_cast<double>(n - 1), 1);
    for (auto _ : state) benchmark::DoNotOptimize(auralize(g, 0.99, 10000));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(10000 * 2 * g.num_edges()));
    state.counters["edges"] = static_cast<double>(g.num_edges());
}
BENCHMARK(BM_AuralizeER)->Arg(150)->Arg(1500)->Unit(benchmark::kMillisecond);

static void BM_FlowStep(benchmark::State& state) {
    const Graph g = gen_ba(static_cast<std::size_t>(state.range(0)), 3, 2);
    auto fs = power_matrix(g, 0.99);
    std::vector<double> s(g.num_nodes(), 1.0), next(g.num_nodes());
    for (auto _ : state) {
        flow_step(fs, s, next);
        s.swap(next);
        benchmark::ClobberMemory();
    }
}
BENCHMARK(BM_FlowStep)->Arg(1500)->Arg(15000);
