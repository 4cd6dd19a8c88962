// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <random>

#include <netaural/checkpoint.hpp>

using namespace netaural;

namespace {

M5Config bench_config(bool small) {
    return small ? small_m5_config(2000) : M5Config{};
}

std::vector<float> random_inputs(std::size_t n, std::size_t l) {
    std::mt19937_64 rng(5);
    std::normal_distribution<float> normal;
    std::vector<float> x(n * l);
    for (auto& v : x) v = normal(rng);
    return x;
}

} // namespace

// range(0): nodes, range(1): 1 for the reduced model at l = 2000.
static void BM_M5Forward(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto ckpt = m5_init(bench_config(state.range(1) != 0), 1);
    const auto net = ckpt.network();
    const auto x = random_inputs(n, ckpt.config.input_length);
    for (auto _ : state) benchmark::DoNotOptimize(net.forward(x, n));
}
BENCHMARK(BM_M5Forward)->Args({50, 1})->Args({150, 0})->Unit(benchmark::kMillisecond);

static void BM_M5ForwardBackward(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto ckpt = m5_init(bench_config(state.range(1) != 0), 1);
    const auto net = ckpt.network();
    const auto x = random_inputs(n, ckpt.config.input_length);
    const std::vector<float> upstream(n, 1.0f / static_cast<float>(n));
    for (auto _ : state) {
        M5Network<float>::Cache cache;
        const auto y = net.forward_train(x, n, cache);
        benchmark::DoNotOptimize(net.backward(cache, upstream));
    }
}
BENCHMARK(BM_M5ForwardBackward)->Args({50, 1})->Args({150, 0})->Unit(benchmark::kMillisecond);
