// SPDX-License-Identifier: Apache-2.0
#include "commands.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <netaural/audio.hpp>
#include <netaural/auralize.hpp>
#include <netaural/binary_io.hpp>
#include <netaural/centrality.hpp>
#include <netaural/checkpoint.hpp>
#include <netaural/datasets.hpp>
#include <netaural/edge_list.hpp>
#include <netaural/evaluation.hpp>
#include <netaural/generators.hpp>
#include <netaural/reproduction.hpp>
#include <netaural/training.hpp>
#include <netaural/waveform_io.hpp>

#include "manifest.hpp"

namespace fs = std::filesystem;

namespace netaural::cli {

namespace {

std::uint64_t default_seed() {
    const char* env = std::getenv("NETAURAL_SEED");
    if (!env || !*env) return 0;
    std::uint64_t seed = 0;
    const std::string_view text(env);
    const auto res = std::from_chars(text.data(), text.data() + text.size(), seed);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
        throw UsageError("NETAURAL_SEED is not an unsigned integer: " + std::string(text));
    }
    return seed;
}

void write_text(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

fs::path manifest_beside(const fs::path& output) {
    return output.string() + ".manifest.json";
}

std::vector<std::string> measure_choices() {
    std::vector<std::string> out;
    for (auto m : target_measures()) out.emplace_back(measure_name(m));
    return out;
}

std::vector<std::string> model_choices() {
    std::vector<std::string> out;
    for (auto m : all_models()) out.emplace_back(model_name(m));
    return out;
}

/// --graph FILE or --dataset NAME.
struct GraphSource {
    std::string file;
    std::string dataset;

    void add_to(CLI::App* cmd) {
        auto* g = cmd->add_option("--graph", file, "Edge-list file")->check(CLI::ExistingFile);
        auto* d = cmd->add_option("--dataset", dataset, "Bundled dataset name")
                      ->check(CLI::IsMember(dataset_names()));
        g->excludes(d);
    }

    LabeledGraph load(RunManifest& manifest) const {
        if (!file.empty()) {
            manifest.add_input(file);
            return load_edge_list_file(file);
        }
        if (!dataset.empty()) return bundled_graph(dataset);
        throw UsageError("one of --graph or --dataset is required");
    }

    std::string name() const { return !file.empty() ? fs::path(file).stem().string() : dataset; }

    nlohmann::json describe() const {
        return !file.empty() ? nlohmann::json{{"graph", file}} : nlohmann::json{{"dataset", dataset}};
    }
};

// gen ---------------------------------------------------------------------

struct GenArgs {
    std::string model;
    GraphModel params;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string manifest;
    bool giant = false;
};

void run_gen(const GenArgs& a) {
    GraphModel m = a.params;
    m.kind = *parse_model(a.model);
    m.validate();
    const std::uint64_t seed = a.seed.value_or(default_seed());
    RunManifest manifest("gen", seed);
    Graph g = generate(m, seed);
    if (a.giant) g = giant_component(g);
    write_text(a.out, write_edge_list(g));
    manifest.set_config({{"model", a.model},
                         {"params", m.describe()},
                         {"giant_component", a.giant},
                         {"nodes", g.num_nodes()},
                         {"edges", g.num_edges()}});
    manifest.add_output(a.out);
    manifest.write(a.manifest.empty() ? manifest_beside(a.out) : fs::path(a.manifest));
}

void add_gen(CLI::App& app) {
    auto a = std::make_shared<GenArgs>();
    auto* cmd = app.add_subcommand("gen", "Generate a random graph as an edge list");
    cmd->add_option("--model", a->model, "Generator")->required()->check(CLI::IsMember(model_choices()));
    cmd->add_option("--n", a->params.n, "Node count (er, ba, ws)");
    cmd->add_option("--p", a->params.p, "Edge probability (er) or rewiring probability (ws)");
    cmd->add_option("--k", a->params.k, "Edges per new node (ba) or ring neighbors (ws)");
    cmd->add_option("--cliques", a->params.cliques, "Number of caves (caveman)");
    cmd->add_option("--size", a->params.size, "Cave size (caveman)");
    cmd->add_option("--rows", a->params.rows, "Grid rows");
    cmd->add_option("--cols", a->params.cols, "Grid columns");
    cmd->add_option("--seed", a->seed, "Random seed (default: $NETAURAL_SEED or 0)");
    cmd->add_flag("--giant", a->giant, "Keep only the largest connected component");
    cmd->add_option("--out", a->out, "Output edge-list path")->required();
    cmd->add_option("--manifest", a->manifest, "Manifest path (default: <out>.manifest.json)");
    cmd->callback([a] { run_gen(*a); });
}

// auralize ----------------------------------------------------------------

struct AuralizeArgs {
    GraphSource source;
    double momentum = kDefaultMomentum;
    std::size_t samples = kDefaultSamples;
    std::string out;
    std::string wav_dir;
    std::string trace;
    std::string spectra;
    std::string spectrogram;
    std::size_t spectrogram_node = 0;
    std::size_t window = 256;
    std::size_t hop = 128;
    std::uint32_t sample_rate = kDefaultSampleRate;
    double gap = 0.1;
    std::string manifest;
};

void run_auralize(const AuralizeArgs& a) {
    if (a.samples == 0) throw UsageError("--l must be at least 1");
    if (a.out.empty() && a.wav_dir.empty() && a.trace.empty() && a.spectra.empty() && a.spectrogram.empty()) {
        throw UsageError("no output requested (use --out, --wav-dir, --trace, --spectra or --spectrogram)");
    }
    RunManifest manifest("auralize", 0);
    const auto lg = a.source.load(manifest);
    const auto w = auralize(lg.graph, a.momentum, a.samples);

    fs::path primary;
    if (!a.out.empty()) {
        if (fs::path(a.out).has_parent_path()) fs::create_directories(fs::path(a.out).parent_path());
        write_file_bytes(a.out, encode_waveforms(w));
        manifest.add_output(a.out);
        primary = a.out;
    }
    if (!a.trace.empty()) {
        write_text(a.trace, waveform_trace_csv(w));
        manifest.add_output(a.trace);
        if (primary.empty()) primary = a.trace;
    }
    if (!a.spectra.empty()) {
        write_text(a.spectra, spectra_csv(w, a.sample_rate));
        manifest.add_output(a.spectra);
        if (primary.empty()) primary = a.spectra;
    }
    if (!a.spectrogram.empty()) {
        if (a.spectrogram_node >= w.nodes()) throw UsageError("--spectrogram-node is out of range");
        const auto col = w.column(a.spectrogram_node);
        write_text(a.spectrogram, spectrogram_csv(spectrogram(col, a.window, a.hop), a.hop, a.sample_rate));
        manifest.add_output(a.spectrogram);
        if (primary.empty()) primary = a.spectrogram;
    }
    if (!a.wav_dir.empty()) {
        fs::create_directories(a.wav_dir);
        const std::string stem = a.source.name();
        for (std::size_t v = 0; v < w.nodes(); ++v) {
            const auto path = fs::path(a.wav_dir) / (stem + "_" + std::to_string(v) + ".wav");
            const auto col = w.column(v);
            write_file_bytes(path.string(), write_wav(waveform_to_clip(col, a.sample_rate)));
            manifest.add_output(path);
        }
        const auto all = fs::path(a.wav_dir) / (stem + "_all.wav");
        write_file_bytes(all.string(), write_wav(concat_all_nodes(w, a.sample_rate, a.gap)));
        manifest.add_output(all);
        if (primary.empty()) primary = fs::path(a.wav_dir) / "auralize";
    }
    auto config = a.source.describe();
    config["m"] = a.momentum;
    config["l"] = a.samples;
    config["nodes"] = w.nodes();
    config["sample_rate"] = a.sample_rate;
    config["wav_gap_s"] = a.gap;
    config["spectrogram"] = {{"node", a.spectrogram_node}, {"window", a.window}, {"hop", a.hop}};
    manifest.set_config(config);
    manifest.write(a.manifest.empty() ? manifest_beside(primary) : fs::path(a.manifest));
}

void add_auralize(CLI::App& app) {
    auto a = std::make_shared<AuralizeArgs>();
    auto* cmd = app.add_subcommand("auralize", "Render node waveforms for a graph");
    a->source.add_to(cmd);
    cmd->add_option("--m", a->momentum, "Momentum")->check(CLI::Range(0.0, 1.0))->capture_default_str();
    cmd->add_option("--l", a->samples, "Recorded samples")->capture_default_str();
    cmd->add_option("--out", a->out, "Waveform matrix file");
    cmd->add_option("--wav-dir", a->wav_dir, "Directory for <graph>_<node>.wav and <graph>_all.wav");
    cmd->add_option("--trace", a->trace, "CSV trace (t, node_0, ...)");
    cmd->add_option("--spectra", a->spectra, "CSV of per-node magnitude spectra");
    cmd->add_option("--spectrogram", a->spectrogram, "CSV spectrogram of one node");
    cmd->add_option("--spectrogram-node", a->spectrogram_node, "Node for --spectrogram")->capture_default_str();
    cmd->add_option("--window", a->window, "Spectrogram window")->capture_default_str();
    cmd->add_option("--hop", a->hop, "Spectrogram hop")->capture_default_str();
    cmd->add_option("--sample-rate", a->sample_rate, "WAV sample rate")->capture_default_str();
    cmd->add_option("--gap", a->gap, "Silence between nodes in _all.wav, seconds")->capture_default_str();
    cmd->add_option("--manifest", a->manifest, "Manifest path");
    cmd->callback([a] { run_auralize(*a); });
}

// centrality --------------------------------------------------------------

struct CentralityArgs {
    GraphSource source;
    std::string measure;
    std::string out;
    std::string manifest;
};

void run_centrality(const CentralityArgs& a) {
    RunManifest manifest("centrality", 0);
    const auto lg = a.source.load(manifest);
    const auto c = compute_centrality(lg.graph, *parse_measure(a.measure));
    write_text(a.out, centrality_csv(c, lg.labels));
    auto config = a.source.describe();
    config["measure"] = a.measure;
    manifest.set_config(config);
    manifest.add_output(a.out);
    manifest.write(a.manifest.empty() ? manifest_beside(a.out) : fs::path(a.manifest));
}

void add_centrality(CLI::App& app) {
    auto a = std::make_shared<CentralityArgs>();
    auto* cmd = app.add_subcommand("centrality", "Compute ground-truth centrality as CSV");
    a->source.add_to(cmd);
    cmd->add_option("--measure", a->measure, "Centrality measure")
        ->required()
        ->check(CLI::IsMember(measure_choices()));
    cmd->add_option("--out", a->out, "Output CSV")->required();
    cmd->add_option("--manifest", a->manifest, "Manifest path");
    cmd->callback([a] { run_centrality(*a); });
}

// train -------------------------------------------------------------------

struct TrainArgs {
    std::string config_file;
    std::string measure;
    std::size_t epochs = 0;
    std::size_t n = 0;
    std::size_t samples = 0;
    double momentum = 0.0;
    std::uint64_t seed = 0;
    double lr = 0.0;
    std::size_t inner_batches = 0;
    std::size_t base_graphs = 0;
    std::vector<std::string> generators;
    bool small_model = false;
    bool no_loss_scale = false;
    std::size_t snapshot_every = 0;
    std::string out_dir;
    std::string resume;
    CLI::App* cmd = nullptr;

    bool given(const char* flag) const {
        const auto* opt = cmd->get_option_no_throw(flag);
        return opt != nullptr && opt->count() > 0;
    }
};

TrainConfig resolve_train_config(const TrainArgs& a, const ModelCheckpoint* resume, RunManifest& manifest) {
    TrainConfig c;
    c.seed = default_seed();
    if (resume && !resume->metadata.train_config.is_null()) merge_json(resume->metadata.train_config, c);
    if (!a.config_file.empty()) {
        manifest.add_input(a.config_file);
        std::ifstream in(a.config_file);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw UsageError("cannot parse config " + a.config_file + ": " + e.what());
        }
        merge_json(j, c);
    }
    if (a.given("--measure")) c.measure = *parse_measure(a.measure);
    if (a.given("--epochs")) c.epochs = a.epochs;
    if (a.given("--n")) c.train_n = a.n;
    if (a.given("--l")) c.samples = a.samples;
    if (a.given("--m")) c.momentum = a.momentum;
    if (a.given("--seed")) c.seed = a.seed;
    if (a.given("--lr")) c.adam.learning_rate = a.lr;
    if (a.given("--inner-batches")) c.inner_batches = a.inner_batches;
    if (a.given("--base-graphs")) c.base_graphs = a.base_graphs;
    if (a.given("--generators")) {
        c.generators.clear();
        for (const auto& g : a.generators) c.generators.push_back(*parse_model(g));
    }
    if (a.small_model) c.model = small_m5_config(c.samples);
    if (a.no_loss_scale) c.loss_scale = false;
    c.validate();
    return c;
}

void run_train(const TrainArgs& a) {
    std::optional<ModelCheckpoint> resume;
    RunManifest manifest("train", 0);
    if (!a.resume.empty()) {
        manifest.add_input(a.resume);
        resume = load_checkpoint_file(a.resume);
    }
    const TrainConfig config = resolve_train_config(a, resume ? &*resume : nullptr, manifest);
    if (resume && resume->config != config.resolved_model()) {
        throw UsageError("resume checkpoint architecture differs from the resolved configuration");
    }
    manifest = RunManifest("train", config.seed);
    if (!a.config_file.empty()) manifest.add_input(a.config_file);
    if (!a.resume.empty()) manifest.add_input(a.resume);
    manifest.set_config(config);

    const fs::path dir(a.out_dir);
    fs::create_directories(dir);
    const auto ckpt_path = dir / "checkpoint.m5ck";
    const auto history_path = dir / "loss_history.csv";
    const bool append = resume && fs::exists(history_path);
    if (!append) write_text(history_path, "step,epoch,loss\n");

    std::size_t skipped = 0;
    const auto result = train(config, resume ? &*resume : nullptr, [&](const EpochSummary& s, const ModelCheckpoint& ckpt) {
        {
            std::ofstream h(history_path, std::ios::binary | std::ios::app);
            h << loss_history_csv(s.steps, false);
            if (!h) throw std::runtime_error("cannot append to " + history_path.string());
        }
        save_checkpoint_file(ckpt, ckpt_path.string());
        if (a.snapshot_every > 0 && s.epoch % a.snapshot_every == 0) {
            char name[64];
            std::snprintf(name, sizeof(name), "checkpoint_epoch_%04zu.m5ck", s.epoch);
            save_checkpoint_file(ckpt, (dir / name).string());
            manifest.add_output(dir / name);
        }
        skipped += s.skipped;
        std::cout << "epoch " << s.epoch << '/' << config.epochs << " graphs " << s.graphs << " skipped "
                  << s.skipped << " loss " << s.mean_loss << std::endl;
    });
    if (skipped > 0) manifest.add_note("skipped " + std::to_string(skipped) + " graphs with a constant target");
    if (result.checkpoint.metadata.epochs_completed == 0 || !fs::exists(ckpt_path)) {
        save_checkpoint_file(result.checkpoint, ckpt_path.string());
    }
    manifest.add_output(ckpt_path);
    manifest.add_output(history_path);
    manifest.write(dir / "manifest.json");
}

void add_train(CLI::App& app) {
    auto a = std::make_shared<TrainArgs>();
    auto* cmd = app.add_subcommand("train", "Train an M5 model to predict a centrality");
    a->cmd = cmd;
    cmd->add_option("--config", a->config_file, "JSON config; flags override it")->check(CLI::ExistingFile);
    cmd->add_option("--measure", a->measure, "Target centrality")->check(CLI::IsMember(measure_choices()));
    cmd->add_option("--epochs", a->epochs, "Epochs (default 300)");
    cmd->add_option("--n", a->n, "Training graph size (default 150)");
    cmd->add_option("--l", a->samples, "Samples per waveform (default 10000)");
    cmd->add_option("--m", a->momentum, "Auralization momentum (default 0.99)")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--seed", a->seed, "Random seed (default: $NETAURAL_SEED or 0)");
    cmd->add_option("--lr", a->lr, "Adam step size (default 1e-3)");
    cmd->add_option("--inner-batches", a->inner_batches, "Optimizer steps per epoch (default 10)");
    cmd->add_option("--base-graphs", a->base_graphs, "Graphs in the first epochs (default 10)");
    cmd->add_option("--generators", a->generators, "Generators to draw from (default all)")
        ->delimiter(',')
        ->check(CLI::IsMember(model_choices()));
    cmd->add_flag("--small-model", a->small_model, "Reduced channel widths for desk-scale runs");
    cmd->add_flag("--no-loss-scale", a->no_loss_scale, "Do not divide the batch loss by the inner batch count");
    cmd->add_option("--snapshot-every", a->snapshot_every, "Also keep checkpoint_epoch_NNNN.m5ck every N epochs");
    cmd->add_option("--out-dir", a->out_dir, "Output directory")->required();
    cmd->add_option("--resume", a->resume, "Checkpoint to continue from")->check(CLI::ExistingFile);
    cmd->callback([a] { run_train(*a); });
}

// eval --------------------------------------------------------------------

struct EvalArgs {
    std::string checkpoint;
    std::string tier;
    std::string measure;
    std::optional<std::uint64_t> seed;
    TestSetOptions tests;
    std::string internet;
    std::optional<double> momentum;
    std::optional<std::size_t> samples;
    bool oracle = false;
    std::string out_dir;
};

void run_eval(const EvalArgs& a) {
    const auto ckpt = load_checkpoint_file(a.checkpoint);
    Measure measure;
    if (!a.measure.empty()) {
        measure = *parse_measure(a.measure);
    } else if (auto m = parse_measure(ckpt.metadata.measure)) {
        measure = *m;
    } else {
        throw UsageError("checkpoint records no measure; pass --measure");
    }
    EvalOptions eo;
    const auto& tc = ckpt.metadata.train_config;
    eo.momentum = a.momentum.value_or(tc.is_object() && tc.contains("momentum") ? tc.at("momentum").get<double>()
                                                                                 : kDefaultMomentum);
    eo.samples = a.samples.value_or(ckpt.config.input_length);

    TestSetOptions opts = a.tests;
    if (!a.internet.empty()) opts.internet_edge_list = a.internet;
    const std::uint64_t seed = a.seed.value_or(default_seed());
    RunManifest manifest("eval", seed);
    manifest.add_input(a.checkpoint);
    if (!a.internet.empty()) manifest.add_input(a.internet);

    const auto tests = build_testset(*parse_tier(a.tier), seed, opts);
    const auto report = a.oracle ? evaluate_with(ground_truth_predictor(measure), tests, measure, eo)
                                 : evaluate(ckpt, tests, measure, eo);
    for (const auto& note : report.notes) std::cerr << "warning: " << note << '\n';
    for (const auto& agg : report.aggregates()) {
        std::cout << agg.family << ": mean rho " << agg.mean << " min " << agg.min << " over "
                  << agg.count - agg.degenerate << " graphs";
        if (agg.degenerate) std::cout << " (" << agg.degenerate << " degenerate)";
        std::cout << '\n';
    }

    const fs::path dir(a.out_dir);
    fs::create_directories(dir);
    write_text(dir / "report.json", report_json(report).dump(2) + "\n");
    write_text(dir / "report.csv", report_csv(report));
    write_text(dir / "matrix.csv", correlation_matrix_csv({report}));
    manifest.set_config({{"checkpoint", a.checkpoint},
                         {"tier", a.tier},
                         {"measure", measure_name(measure)},
                         {"m", eo.momentum},
                         {"l", eo.samples},
                         {"per_model", opts.per_model},
                         {"small_n", opts.small_n},
                         {"large_n", opts.large_n},
                         {"oracle_predictor", a.oracle}});
    for (const auto& note : report.notes) manifest.add_note(note);
    for (const char* f : {"report.json", "report.csv", "matrix.csv"}) manifest.add_output(dir / f);
    manifest.write(dir / "manifest.json");
}

void add_eval(CLI::App& app) {
    auto a = std::make_shared<EvalArgs>();
    auto* cmd = app.add_subcommand("eval", "Evaluate a checkpoint on a test tier");
    cmd->add_option("--checkpoint", a->checkpoint, "Model checkpoint")->required()->check(CLI::ExistingFile);
    cmd->add_option("--tier", a->tier, "Test tier")->required()->check(CLI::IsMember({"small", "large", "real"}));
    cmd->add_option("--measure", a->measure, "Centrality (default: the checkpoint's)")
        ->check(CLI::IsMember(measure_choices()));
    cmd->add_option("--seed", a->seed, "Test-set seed (default: $NETAURAL_SEED or 0)");
    cmd->add_option("--per-model", a->tests.per_model, "Graphs per generator")->capture_default_str();
    cmd->add_option("--small-n", a->tests.small_n, "Small tier size")->capture_default_str();
    cmd->add_option("--large-n", a->tests.large_n, "Large tier size")->capture_default_str();
    cmd->add_option("--internet", a->internet, "AS-level topology edge list for the real tier")
        ->check(CLI::ExistingFile);
    cmd->add_option("--m", a->momentum, "Auralization momentum (default: the training value)")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--l", a->samples, "Samples (default: the model input length)");
    cmd->add_flag("--oracle-predictor", a->oracle, "Debug: predict the ground truth itself");
    cmd->add_option("--out-dir", a->out_dir, "Output directory")->required();
    cmd->callback([a] { run_eval(*a); });
}

// reproduce ---------------------------------------------------------------

struct ReproduceArgs {
    bool confirm = false;
    TrainArgs train;
    std::uint64_t test_seed = 1;
    std::size_t per_model = 5;
    std::string internet;
    std::vector<std::string> measures;
};

void run_reproduce(const ReproduceArgs& a) {
    if (!a.confirm) {
        throw UsageError("reproduce runs the full protocol (hours of compute); pass --confirm to start it");
    }
    RunManifest scratch("reproduce", 0);
    ReproductionConfig rc;
    rc.opt_in = true;
    rc.train = resolve_train_config(a.train, nullptr, scratch);
    if (!a.measures.empty()) {
        rc.measures.clear();
        for (const auto& m : a.measures) rc.measures.push_back(*parse_measure(m));
    }
    rc.test_seed = a.test_seed;
    rc.tests.per_model = a.per_model;
    if (!a.internet.empty()) rc.tests.internet_edge_list = a.internet;
    rc.out_dir = a.train.out_dir;

    RunManifest manifest("reproduce", rc.train.seed);
    if (!a.train.config_file.empty()) manifest.add_input(a.train.config_file);
    if (!a.internet.empty()) manifest.add_input(a.internet);
    const auto result = full_reproduction(rc, [](const std::string& line) { std::cout << line << std::endl; });
    manifest.set_config({{"train", rc.train}, {"test_seed", rc.test_seed}, {"per_model", rc.tests.per_model}});
    manifest.add_output(result.table_csv);
    manifest.add_output(result.report_json);
    manifest.write(rc.out_dir / "manifest.json");
    std::cout << "wrote " << result.table_csv.string() << '\n';
}

void add_reproduce(CLI::App& app) {
    auto a = std::make_shared<ReproduceArgs>();
    auto* cmd = app.add_subcommand("reproduce", "Full train-and-evaluate protocol for every measure (opt-in)");
    a->train.cmd = cmd;
    cmd->add_flag("--confirm", a->confirm, "Required: acknowledge the multi-hour runtime");
    cmd->add_option("--config", a->train.config_file, "JSON training config")->check(CLI::ExistingFile);
    cmd->add_option("--epochs", a->train.epochs, "Epochs per measure (default 300)");
    cmd->add_option("--n", a->train.n, "Training graph size (default 150)");
    cmd->add_option("--l", a->train.samples, "Samples per waveform (default 10000)");
    cmd->add_option("--m", a->train.momentum, "Auralization momentum")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--seed", a->train.seed, "Training seed");
    cmd->add_flag("--small-model", a->train.small_model, "Reduced channel widths");
    cmd->add_option("--measures", a->measures, "Subset of measures")
        ->delimiter(',')
        ->check(CLI::IsMember(measure_choices()));
    cmd->add_option("--test-seed", a->test_seed, "Test-set seed")->capture_default_str();
    cmd->add_option("--per-model", a->per_model, "Test graphs per generator")->capture_default_str();
    cmd->add_option("--internet", a->internet, "AS-level topology edge list")->check(CLI::ExistingFile);
    cmd->add_option("--out-dir", a->train.out_dir, "Output directory")->required();
    cmd->callback([a] { run_reproduce(*a); });
}

} // namespace

void add_commands(CLI::App& app) {
    add_gen(app);
    add_auralize(app);
    add_centrality(app);
    add_train(app);
    add_eval(app);
    add_reproduce(app);
}

} // namespace netaural::cli
