// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "netaural/auralize.hpp"
#include "netaural/centrality.hpp"
#include "netaural/checkpoint.hpp"
#include "netaural/generators.hpp"

namespace netaural {

enum class Tier { Small, Large, Real };

std::string_view tier_name(Tier t);
std::optional<Tier> parse_tier(std::string_view name);

struct TestGraph {
    std::string id;      // e.g. "er-0", "karate"
    std::string family;  // generator name, or "real"
    Graph graph;
};

struct TestSetOptions {
    std::size_t per_model = 5;
    std::size_t small_n = 150;
    std::size_t large_n = 1500;
    std::vector<ModelKind> models = all_models();
    DensityRanges densities;
    /// Edge list of an AS-level Internet topology for the real tier.
    std::optional<std::string> internet_edge_list;
};

struct TestSet {
    Tier tier = Tier::Small;
    std::vector<TestGraph> graphs;
    std::vector<std::string> notes;
};

/// small/large: per_model fresh graphs per generator at small_n / large_n
/// (giant components). real: the bundled datasets plus the optional
/// Internet edge list; a note records when the latter is absent.
TestSet build_testset(Tier tier, std::uint64_t seed, const TestSetOptions& options = {});

struct EvalRecord {
    std::string graph_id;
    std::string family;
    std::size_t n = 0;
    Measure measure = Measure::Degree;
    /// Empty when the correlation is undefined (constant truth or prediction).
    std::optional<double> rho;
};

struct EvalAggregate {
    std::string family;
    std::size_t count = 0;
    std::size_t degenerate = 0;
    double mean = 0.0;  // over non-degenerate records
    double min = 0.0;
};

struct EvalReport {
    Tier tier = Tier::Small;
    Measure measure = Measure::Degree;
    std::vector<EvalRecord> records;
    std::vector<std::string> notes;

    /// Per family plus an "all" row; families flagged in notes for
    /// low-variability train/test leakage (grid, caveman).
    std::vector<EvalAggregate> aggregates() const;
};

struct EvalOptions {
    double momentum = kDefaultMomentum;
    std::size_t samples = kDefaultSamples;
};

/// Maps a graph and its waveforms to per-node scores.
using Predictor = std::function<std::vector<double>(const TestGraph&, const WaveformMatrix&)>;

/// Scores every test graph with the checkpoint in evaluation mode.
/// Throws std::invalid_argument when options.samples differs from the
/// checkpoint's input length.
EvalReport evaluate(const ModelCheckpoint& ckpt, const TestSet& tests, Measure measure,
                    const EvalOptions& options);
EvalReport evaluate_with(const Predictor& predictor, const TestSet& tests, Measure measure,
                         const EvalOptions& options);

/// Predicts the ground truth itself; every correlation is 1.
Predictor ground_truth_predictor(Measure measure);

nlohmann::json report_json(const EvalReport& report);
/// "graph,family,n,measure,rho" with an empty rho for degenerate records.
std::string report_csv(const EvalReport& report);

/// Table with one row per network and one column per measure (Deg, CC, EC,
/// BC order, only those present), built from reports over the same graphs.
std::string correlation_matrix_csv(const std::vector<EvalReport>& reports);

} // namespace netaural
