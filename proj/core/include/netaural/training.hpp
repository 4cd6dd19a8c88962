// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "netaural/auralize.hpp"
#include "netaural/centrality.hpp"
#include "netaural/checkpoint.hpp"
#include "netaural/generators.hpp"
#include "netaural/m5.hpp"
#include "netaural/optimizer.hpp"

namespace netaural {

struct TrainConfig {
    Measure measure = Measure::Degree;
    std::size_t epochs = 300;
    /// Graphs in epoch e: base_graphs + floor(e / growth_divisor).
    std::size_t base_graphs = 10;
    std::size_t growth_divisor = 10;
    /// Optimizer steps taken on each epoch's graphs.
    std::size_t inner_batches = 10;
    std::size_t train_n = 150;
    double momentum = kDefaultMomentum;
    std::size_t samples = kDefaultSamples;
    std::vector<ModelKind> generators = all_models();
    DensityRanges densities;
    AdamConfig adam;
    /// Multiply the batch loss by 1/inner_batches.
    bool loss_scale = true;
    /// Architecture; input_length is forced to `samples`.
    M5Config model;
    std::uint64_t seed = 0;

    void validate() const;
    M5Config resolved_model() const;
};

void to_json(nlohmann::json& j, const TrainConfig& c);
/// Fills only the keys present in j, leaving other fields untouched.
void merge_json(const nlohmann::json& j, TrainConfig& c);

std::size_t graphs_per_epoch(const TrainConfig& config, std::size_t epoch);

/// A generated graph ready for optimization.
struct TrainingGraph {
    GraphModel model;
    Graph graph;
    CentralityVector target;
    std::vector<float> inputs;  // n x samples
};

/// Graphs for one epoch (1-based), deterministic in (config.seed, epoch).
/// Graphs whose target is constant or undefined are dropped and redrawn;
/// `skipped` receives how many.
std::vector<TrainingGraph> epoch_graphs(const TrainConfig& config, std::size_t epoch,
                                        std::size_t* skipped = nullptr);

struct LossRecord {
    std::size_t step = 0;
    std::size_t epoch = 0;
    double loss = 0.0;  // mean over graphs of 1 - rho, unscaled
};

struct EpochSummary {
    std::size_t epoch = 0;
    std::size_t graphs = 0;
    std::size_t skipped = 0;
    double mean_loss = 0.0;
    std::vector<LossRecord> steps;  // this epoch's records
};

struct TrainResult {
    ModelCheckpoint checkpoint;
    std::vector<LossRecord> history;
    std::size_t skipped_graphs = 0;
};

/// Invoked after every epoch with the checkpoint as of that epoch.
using EpochCallback = std::function<void(const EpochSummary&, const ModelCheckpoint&)>;

/**
 * Centrality learning. Each epoch draws graphs_per_epoch() graphs from
 * uniformly chosen generators, auralizes them once, and takes inner_batches
 * optimizer steps on the mean per-graph loss 1 - rho(target, M5(S)).
 * Batch-norm statistics are per graph. When `resume` is given, training
 * continues after its epochs_completed with its optimizer state.
 */
TrainResult train(const TrainConfig& config, const ModelCheckpoint* resume = nullptr,
                  const EpochCallback& on_epoch = {});

/// "step,epoch,loss" rows, with the header line unless header is false.
std::string loss_history_csv(const std::vector<LossRecord>& history, bool header = true);

} // namespace netaural
