// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "netaural/evaluation.hpp"
#include "netaural/training.hpp"

namespace netaural {

struct ReproductionConfig {
    /// Must be set; the full protocol takes hours.
    bool opt_in = false;
    TrainConfig train;  // measure is overridden per run
    std::vector<Measure> measures = target_measures();
    std::vector<Tier> tiers = {Tier::Small, Tier::Large, Tier::Real};
    TestSetOptions tests;
    std::uint64_t test_seed = 1;
    std::filesystem::path out_dir = "reproduction";
};

struct ReproductionResult {
    std::vector<EvalReport> reports;
    std::filesystem::path table_csv;
    std::filesystem::path report_json;
    bool complete = false;
};

/// Progress sink for long runs; receives one line per event.
using ProgressFn = std::function<void(const std::string&)>;

/**
 * Trains one model per measure and evaluates it on every tier. Layout under
 * out_dir: <measure>/checkpoint.m5ck (rewritten every epoch; an existing one
 * is resumed), <measure>/loss_history.csv, table.csv and report.json.
 * On memory exhaustion, the reports gathered so far are written and a
 * std::runtime_error naming the partial files is thrown.
 */
ReproductionResult full_reproduction(const ReproductionConfig& config, const ProgressFn& progress = {});

} // namespace netaural
