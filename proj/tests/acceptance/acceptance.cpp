// SPDX-License-Identifier: Apache-2.0
// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//
//   netaural_acceptance [--work-dir DIR] [--only 1,4,13]
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <netaural/audio.hpp>
#include <netaural/auralize.hpp>
#include <netaural/centrality.hpp>
#include <netaural/generators.hpp>
#include <netaural/pearson.hpp>
#include <netaural/training.hpp>

#include "gradcheck.hpp"
#include "oracles.hpp"
#include "riff.hpp"

using namespace netaural;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(3);
    s << x;
    return s.str();
}

// Worst deviation tracker.
struct MaxErr {
    double value = 0.0;
    void add(double e) { value = std::isnan(e) ? INFINITY : std::max(value, e); }
};

std::vector<double> raw_row(const WaveformMatrix& w, std::size_t t) {
    const auto r = w.row(t);
    return {r.begin(), r.end()};
}

// ---- 1: energy conservation -------------------------------------------------

Outcome energy_conservation() {
    constexpr double kTol = 1e-6;
    Rng rng(derive_seed(2024, 1));
    const ModelKind kinds[] = {ModelKind::ER, ModelKind::BA, ModelKind::WS};
    MaxErr err;
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = i % 2 ? 150 : 50;
        const Graph g = generate(sample_model(kinds[i % 3], n, rng), rng.next_u64());
        for (double m : {0.0, 0.9, 0.99}) {
            const auto w = auralize_raw(g, m, 10000);
            for (std::size_t t = 0; t < w.samples(); ++t) {
                double total = 0.0;
                for (double x : w.row(t)) total += x;
                err.add(std::abs(total - static_cast<double>(g.num_nodes())));
            }
        }
    }
    return {err.value <= kTol, "max |sum S_t - n| = " + fmt(err.value) + " (tol 1e-6)"};
}

// ---- 2: m = 0 reduces to P^T s ----------------------------------------------

Outcome zero_momentum_reduction() {
    constexpr double kTol = 1e-12;
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> potential(0.0, 2.0);
    std::uniform_int_distribution<std::size_t> size(2, 20);
    MaxErr err;
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = oracle::random_graph_no_isolated(size(rng), 0.3, rng);
        const auto p = oracle::transition(g);
        auto state = power_matrix(g, 0.0);
        std::vector<double> s(g.num_nodes());
        for (auto& x : s) x = potential(rng);
        std::vector<double> next(s.size());
        for (int step = 0; step < 5; ++step) {
            flow_step(state, s, next);
            const auto expect = oracle::transpose_times(p, s);
            for (std::size_t v = 0; v < s.size(); ++v) err.add(std::abs(next[v] - expect[v]));
            s = next;
        }
    }
    return {err.value <= kTol, "max |s_next - P^T s| = " + fmt(err.value) + " (tol 1e-12)"};
}

// ---- 3: stationary limit ----------------------------------------------------

Outcome stationary_limit() {
    constexpr double kTol = 1e-8;
    const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {2, 3}};
    const Graph g(4, edges);
    // Degrees 2, 2, 3, 1 of total 8, scaled to the conserved total 4.
    const std::vector<double> expect{1.0, 1.0, 1.5, 0.5};
    const auto w = auralize_raw(g, 0.0, 500);
    MaxErr err;
    for (std::size_t v = 0; v < 4; ++v) err.add(std::abs(w.at(499, v) - expect[v]));
    return {err.value <= kTol, "max |S_500 - [1,1,1.5,0.5]| = " + fmt(err.value) + " (tol 1e-8)"};
}

// ---- 4: hand-computed trace -------------------------------------------------

Outcome hand_trace() {
    const Graph g = oracle::path_graph(3);
    const auto raw = auralize_raw(g, 0.0, 4);
    const std::vector<std::vector<double>> expect{{0.5, 2, 0.5}, {1, 1, 1}, {0.5, 2, 0.5}, {1, 1, 1}};
    bool exact = raw.samples() == 4 && raw.nodes() == 3;
    for (std::size_t t = 0; exact && t < 4; ++t) exact = raw_row(raw, t) == expect[t];
    const auto w = auralize(g, 0.0, 4);
    MaxErr mean;
    for (std::size_t v = 0; v < 3; ++v) {
        double total = 0.0;
        for (std::size_t t = 0; t < 4; ++t) total += w.at(t, v);
        mean.add(std::abs(total / 4.0));
    }
    return {exact && mean.value <= 1e-15,
            std::string(exact ? "rows exact" : "rows differ") + ", max |column mean| = " + fmt(mean.value) +
                " (tol 1e-15)"};
}

// ---- 5: sparse vs dense -----------------------------------------------------

Outcome sparse_dense() {
    constexpr double kTol = 1e-12;
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> size(2, 20);
    std::uniform_real_distribution<double> density(0.05, 0.6);
    MaxErr err;
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = oracle::random_graph(size(rng), density(rng), rng);
        for (double m : {0.0, 0.9, 0.99}) {
            const auto sparse = auralize(g, m, 200);
            const auto dense = auralize_dense_oracle(g, m, 200);
            for (std::size_t i = 0; i < sparse.data().size(); ++i)
                err.add(std::abs(sparse.data()[i] - dense.data()[i]));
        }
    }
    return {err.value <= kTol, "max |sparse - dense| = " + fmt(err.value) + " (tol 1e-12)"};
}

// ---- 6: symmetry and equivariance -------------------------------------------

Outcome symmetry() {
    constexpr double kTol = 1e-9;
    MaxErr ring;
    const auto c = auralize(oracle::cycle_graph(10));
    for (std::size_t t = 0; t < c.samples(); ++t) {
        const auto row = c.row(t);
        const auto [lo, hi] = std::minmax_element(row.begin(), row.end());
        ring.add(*hi - *lo);
    }
    std::mt19937_64 rng(6);
    MaxErr perm_err;
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = oracle::random_graph(30, 0.12, rng);
        const auto perm = oracle::random_permutation(g.num_nodes(), rng);
        const auto w = auralize(g, 0.99, 2000);
        const auto wp = auralize(permute(g, perm), 0.99, 2000);
        for (std::size_t t = 0; t < w.samples(); ++t)
            for (NodeId v = 0; v < g.num_nodes(); ++v) perm_err.add(std::abs(wp.at(t, perm[v]) - w.at(t, v)));
    }
    return {ring.value <= kTol && perm_err.value <= kTol,
            "C_10 column spread " + fmt(ring.value) + ", permutation error " + fmt(perm_err.value) + " (tol 1e-9)"};
}

// ---- 7: centrality oracles --------------------------------------------------

double eigen_residual(const Graph& g) {
    const auto x = eigenvector_centrality(g).values;
    const auto a = oracle::adjacency(g);
    std::vector<double> ax(x.size(), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) ax[i] += a[i][j] * x[j];
    double lambda = 0.0;  // Rayleigh quotient; x has unit norm
    for (std::size_t i = 0; i < x.size(); ++i) lambda += x[i] * ax[i];
    double r = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) r += (ax[i] - lambda * x[i]) * (ax[i] - lambda * x[i]);
    return std::sqrt(r);
}

Outcome centrality_oracles() {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> size(1, 10);
    std::uniform_real_distribution<double> density(0.1, 0.8);
    MaxErr brandes;
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_graph(size(rng), density(rng), rng);
        const auto fast = betweenness_centrality(g).values;
        const auto naive = naive_betweenness_oracle(g).values;
        const auto counted = oracle::betweenness(g);
        for (std::size_t v = 0; v < fast.size(); ++v) {
            brandes.add(std::abs(fast[v] - naive[v]));
            brandes.add(std::abs(fast[v] - counted[v]));
        }
    }

    MaxErr residual;
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = giant_component(oracle::random_graph(40, 0.1, rng));
        if (g.num_edges() > 0) residual.add(eigen_residual(g));
    }
    residual.add(eigen_residual(oracle::star_graph(6)));

    MaxErr closed;
    closed.add(std::abs(betweenness_centrality(oracle::star_graph(6)).values[0] - 1.0));
    closed.add(std::abs(betweenness_centrality(oracle::path_graph(3)).values[1] - 1.0));
    const auto ev = eigenvector_centrality(oracle::path_graph(3)).values;
    closed.add(std::abs(ev[0] - 0.5));
    closed.add(std::abs(ev[1] - std::numbers::sqrt2 / 2));
    closed.add(std::abs(ev[2] - 0.5));

    return {brandes.value <= 1e-12 && residual.value <= 1e-8 && closed.value <= 1e-9,
            "Brandes vs naive " + fmt(brandes.value) + " (tol 1e-12), eigen residual " + fmt(residual.value) +
                " (tol 1e-8), closed forms " + fmt(closed.value) + " (tol 1e-9)"};
}

// ---- 8: loss correctness ----------------------------------------------------

Outcome loss_correctness() {
    using V = std::vector<double>;
    MaxErr examples;
    examples.add(std::abs(pearson(V{1, 2, 3}, V{2, 4, 6}) - 1.0));
    examples.add(std::abs(pearson(V{1, 2, 3}, V{3, 2, 1}) + 1.0));
    examples.add(std::abs(pearson(V{1, 2, 3, 4}, V{1, 3, 2, 4}) - 0.8));

    std::mt19937_64 rng(8);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> scale(0.01, 100.0);
    std::uniform_real_distribution<double> shift(-100.0, 100.0);
    MaxErr affine;
    for (int draw = 0; draw < 100; ++draw) {
        V c(30), p(30);
        for (auto& x : c) x = normal(rng);
        for (auto& x : p) x = normal(rng);
        const double a = scale(rng), b = shift(rng);
        V moved(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) moved[i] = a * c[i] + b;
        affine.add(std::abs(pearson_loss(moved, p).loss - pearson_loss(c, p).loss));
    }
    return {examples.value <= 1e-12 && affine.value <= 1e-12,
            "examples " + fmt(examples.value) + ", affine invariance " + fmt(affine.value) + " (tol 1e-12)"};
}

// ---- 9: gradient check ------------------------------------------------------

Outcome gradient_check() {
    M5Config config;
    config.input_length = 400;
    config.stage_channels = {4, 4, 8, 8};
    const auto samples = oracle::check_m5_gradient(config, 6, 30, 9);
    MaxErr worst;
    for (const auto& s : samples) worst.add(s.relative);
    return {samples.size() >= 20 && worst.value < 1e-3,
            std::to_string(samples.size()) + " parameters, max relative error " + fmt(worst.value) + " (tol 1e-3)"};
}

// ---- 10 / 11: desk-scale learning and extrapolation -------------------------

struct DeskRun {
    bool trained = false;
    ModelCheckpoint checkpoint;
    double final_loss = 0.0;
};

DeskRun& desk_run() {
    static DeskRun run;
    if (run.trained) return run;
    TrainConfig c;
    c.measure = Measure::Degree;
    c.generators = {ModelKind::ER, ModelKind::BA};
    c.train_n = 50;
    c.samples = 2000;
    c.epochs = 50;
    c.model = small_m5_config(2000);
    c.seed = 1;
    const auto result = train(c);
    double total = 0.0;
    std::size_t count = 0;
    for (const auto& r : result.history) {
        if (r.epoch == c.epochs) {
            total += r.loss;
            ++count;
        }
    }
    run.checkpoint = result.checkpoint;
    run.final_loss = total / static_cast<double>(count);
    run.trained = true;
    return run;
}

// Correlation of model output with degree on fresh graphs from `kinds`.
std::vector<double> test_correlations(const ModelCheckpoint& ckpt, const std::vector<ModelKind>& kinds,
                                      std::size_t n, std::size_t per_kind, std::uint64_t stream) {
    Rng rng(derive_seed(777, stream));
    std::vector<double> rhos;
    for (auto kind : kinds) {
        for (std::size_t i = 0; i < per_kind;) {
            const Graph g = giant_component(generate(sample_model(kind, n, rng), rng.next_u64()));
            const auto truth = degree_centrality(g).values;
            if (is_constant(truth)) continue;
            const auto pred = m5_forward(ckpt, auralize(g, kDefaultMomentum, ckpt.config.input_length)).values;
            rhos.push_back(oracle::pearson(truth, pred));
            ++i;
        }
    }
    return rhos;
}

Outcome desk_learning() {
    const auto& run = desk_run();
    const auto rhos = test_correlations(run.checkpoint, {ModelKind::ER, ModelKind::BA}, 50, 10, 10);
    double mean = 0.0;
    for (double r : rhos) mean += r / static_cast<double>(rhos.size());
    return {run.final_loss < 0.3 && mean >= 0.8,
            "final-epoch loss " + fmt(run.final_loss) + " (< 0.3), test mean rho " + fmt(mean) + " over " +
                std::to_string(rhos.size()) + " graphs (>= 0.8)"};
}

Outcome extrapolation() {
    const auto& run = desk_run();
    const auto rhos = test_correlations(run.checkpoint, {ModelKind::ER}, 500, 5, 11);
    const double worst = *std::min_element(rhos.begin(), rhos.end());
    return {worst >= 0.6, "min rho " + fmt(worst) + " over " + std::to_string(rhos.size()) + " ER graphs, n=500 (>= 0.6)"};
}

// ---- 12: WAV ----------------------------------------------------------------

void put_le(std::vector<std::uint8_t>& out, std::uint32_t v, int bytes) {
    for (int i = 0; i < bytes; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

Outcome wav_exactness() {
    const std::vector<std::int16_t> samples{0, 1, -1, 32767, -32768, 1234, -4321};
    const AudioClip clip(samples, 22050);
    const auto bytes = write_wav(clip);

    // Header built by hand from the RIFF/WAVE layout.
    std::vector<std::uint8_t> expect;
    for (char ch : std::string("RIFF")) expect.push_back(static_cast<std::uint8_t>(ch));
    put_le(expect, 36 + 2 * samples.size(), 4);
    for (char ch : std::string("WAVEfmt ")) expect.push_back(static_cast<std::uint8_t>(ch));
    put_le(expect, 16, 4);
    put_le(expect, 1, 2);
    put_le(expect, 1, 2);
    put_le(expect, 22050, 4);
    put_le(expect, 22050 * 2, 4);
    put_le(expect, 2, 2);
    put_le(expect, 16, 2);
    for (char ch : std::string("data")) expect.push_back(static_cast<std::uint8_t>(ch));
    put_le(expect, 2 * samples.size(), 4);
    for (auto s : samples) put_le(expect, static_cast<std::uint16_t>(s), 2);
    const bool bytes_ok = bytes == expect;

    const auto wave = riff::parse(bytes);
    const bool parsed_ok = wave && wave->format == 1 && wave->channels == 1 && wave->sample_rate == 22050 &&
                           wave->byte_rate == 44100 && wave->block_align == 2 && wave->bits == 16 &&
                           wave->samples == samples;

    const std::vector<double> col{0.5, -1.0, 0.25};
    const std::vector<double> sym{2, -2};
    const bool scaling_ok =
        waveform_to_clip(col, kDefaultSampleRate, 0.9).samples() == std::vector<std::int16_t>{14745, -29490, 7373} &&
        waveform_to_clip(sym, kDefaultSampleRate, 1.0).samples() == std::vector<std::int16_t>{32767, -32767};

    return {bytes_ok && parsed_ok && scaling_ok, std::string("bytes ") + (bytes_ok ? "match" : "differ") +
                                                     ", RIFF parser " + (parsed_ok ? "agrees" : "disagrees") +
                                                     ", scaling examples " + (scaling_ok ? "match" : "differ")};
}

// ---- 13: CLI determinism ----------------------------------------------------

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome cli_determinism(const fs::path& work) {
#ifndef NETAURAL_CLI_PATH
    (void)work;
    return {false, "command-line tool not built"};
#else
    std::vector<fs::path> dirs{work / "determinism_a", work / "determinism_b"};
    for (const auto& d : dirs) {
        fs::remove_all(d);
        const std::string cmd = std::string(NETAURAL_CLI_PATH) + " train --epochs 2 --seed 1 --out-dir " +
                                d.string() + " > " + (work / (d.filename().string() + ".log")).string() + " 2>&1";
        const int status = std::system(cmd.c_str());
        if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) return {false, "train exited with status " + std::to_string(status)};
    }
    bool same = true;
    for (const char* f : {"loss_history.csv", "checkpoint.m5ck"}) {
        const auto a = slurp(dirs[0] / f);
        same = same && !a.empty() && a == slurp(dirs[1] / f);
    }
    return {same, std::string("loss history and checkpoint ") + (same ? "byte-identical" : "differ")};
#endif
}

} // namespace

int main(int argc, char** argv) {
    fs::path work = fs::temp_directory_path() / "netaural_acceptance";
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--work-dir" && i + 1 < argc) {
            work = argv[++i];
        } else if (arg == "--only" && i + 1 < argc) {
            std::istringstream list(argv[++i]);
            for (std::string id; std::getline(list, id, ',');) only.insert(std::stoi(id));
        } else {
            std::cerr << "usage: " << argv[0] << " [--work-dir DIR] [--only 1,2,...]\n";
            return 2;
        }
    }
    fs::create_directories(work);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"energy conservation", energy_conservation},
        {"zero-momentum reduction to P^T s", zero_momentum_reduction},
        {"stationary limit", stationary_limit},
        {"hand-computed P_3 trace", hand_trace},
        {"sparse vs dense oracle", sparse_dense},
        {"symmetry and permutation equivariance", symmetry},
        {"centrality oracles", centrality_oracles},
        {"correlation loss", loss_correctness},
        {"gradient check", gradient_check},
        {"desk-scale degree learning", desk_learning},
        {"size extrapolation to n=500", extrapolation},
        {"WAV bit-exactness", wav_exactness},
        {"train determinism via CLI", [&] { return cli_determinism(work); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!only.empty() && !only.count(id)) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !out.pass;
        std::printf("%s  %2d  %-40s %s [%.1f s]\n", out.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(),
                    out.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
