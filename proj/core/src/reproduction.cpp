// SPDX-License-Identifier: Apache-2.0
#include "netaural/reproduction.hpp"

#include <fstream>
#include <new>
#include <optional>
#include <stdexcept>

#include "netaural/binary_io.hpp"

namespace netaural {

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

void append_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::app);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

void write_outputs(const ReproductionConfig& config, ReproductionResult& result) {
    result.table_csv = config.out_dir / "table.csv";
    result.report_json = config.out_dir / "report.json";
    write_text(result.table_csv, correlation_matrix_csv(result.reports));
    nlohmann::json j;
    j["complete"] = result.complete;
    j["train_config"] = config.train;
    j["test_seed"] = config.test_seed;
    j["reports"] = nlohmann::json::array();
    for (const auto& r : result.reports) j["reports"].push_back(report_json(r));
    write_text(result.report_json, j.dump(2) + "\n");
}

} // namespace

ReproductionResult full_reproduction(const ReproductionConfig& config, const ProgressFn& progress) {
    if (!config.opt_in) {
        throw std::invalid_argument("full reproduction is long-running and must be explicitly enabled");
    }
    const auto say = [&](const std::string& line) {
        if (progress) progress(line);
    };
    std::filesystem::create_directories(config.out_dir);

    ReproductionResult result;
    try {
        std::vector<TestSet> sets;
        for (auto tier : config.tiers) sets.push_back(build_testset(tier, config.test_seed, config.tests));

        for (auto measure : config.measures) {
            TrainConfig tc = config.train;
            tc.measure = measure;
            const auto dir = config.out_dir / std::string(measure_name(measure));
            std::filesystem::create_directories(dir);
            const auto ckpt_path = dir / "checkpoint.m5ck";
            const auto history_path = dir / "loss_history.csv";

            std::optional<ModelCheckpoint> resume;
            if (std::filesystem::exists(ckpt_path)) {
                const auto expected = tc.resolved_model();
                resume = load_checkpoint_file(ckpt_path.string(), &expected);
                say(std::string(measure_name(measure)) + ": resuming after epoch " +
                    std::to_string(resume->metadata.epochs_completed));
            } else {
                write_text(history_path, "step,epoch,loss\n");
            }

            const auto trained = train(tc, resume ? &*resume : nullptr,
                            [&](const EpochSummary& s, const ModelCheckpoint& ckpt) {
                                append_text(history_path, loss_history_csv(s.steps, false));
                                save_checkpoint_file(ckpt, ckpt_path.string());
                                say(std::string(measure_name(measure)) + " epoch " + std::to_string(s.epoch) +
                                    " loss " + std::to_string(s.mean_loss));
                            });

            EvalOptions eo{tc.momentum, tc.samples};
            for (const auto& set : sets) {
                result.reports.push_back(evaluate(trained.checkpoint, set, measure, eo));
                say(std::string(measure_name(measure)) + ": evaluated tier " +
                    std::string(tier_name(set.tier)));
            }
        }
        result.complete = true;
        write_outputs(config, result);
    } catch (const std::bad_alloc&) {
        write_outputs(config, result);
        throw std::runtime_error("out of memory; partial results written to " + result.table_csv.string() +
                                 " and " + result.report_json.string());
    }
    return result;
}

} // namespace netaural
