// SPDX-License-Identifier: Apache-2.0
#include "netaural/training.hpp"

#include <charconv>
#include <stdexcept>

#include "netaural/pearson.hpp"
#include "netaural/rng.hpp"

namespace netaural {

void TrainConfig::validate() const {
    if (epochs < 1) throw std::invalid_argument("epochs must be at least 1");
    if (measure == Measure::Predicted) throw std::invalid_argument("training target must be a centrality measure");
    if (growth_divisor == 0) throw std::invalid_argument("growth divisor must be positive");
    if (base_graphs == 0) throw std::invalid_argument("at least one graph per epoch is required");
    if (train_n < 4) throw std::invalid_argument("training graphs need at least 4 nodes");
    if (samples == 0) throw std::invalid_argument("sample count must be positive");
    if (!(momentum >= 0.0 && momentum <= 1.0)) throw std::invalid_argument("momentum must lie in [0, 1]");
    if (generators.empty()) throw std::invalid_argument("at least one graph generator is required");
    if (!(adam.learning_rate > 0.0)) throw std::invalid_argument("learning rate must be positive");
    resolved_model().validate();
}

M5Config TrainConfig::resolved_model() const {
    M5Config m = model;
    m.input_length = samples;
    return m;
}

void to_json(nlohmann::json& j, const TrainConfig& c) {
    std::vector<std::string> gens;
    for (auto g : c.generators) gens.emplace_back(model_name(g));
    j = nlohmann::json{
        {"measure", measure_name(c.measure)},
        {"epochs", c.epochs},
        {"base_graphs", c.base_graphs},
        {"growth_divisor", c.growth_divisor},
        {"inner_batches", c.inner_batches},
        {"train_n", c.train_n},
        {"momentum", c.momentum},
        {"samples", c.samples},
        {"generators", gens},
        {"densities",
         {{"er_p_min", c.densities.er_p_min},
          {"er_p_max", c.densities.er_p_max},
          {"er_reference_n", c.densities.er_reference_n},
          {"ba_k_min", c.densities.ba_k_min},
          {"ba_k_max", c.densities.ba_k_max},
          {"ws_k", c.densities.ws_k},
          {"ws_p_min", c.densities.ws_p_min},
          {"ws_p_max", c.densities.ws_p_max},
          {"caveman_size_min", c.densities.caveman_size_min},
          {"caveman_size_max", c.densities.caveman_size_max}}},
        {"adam",
         {{"learning_rate", c.adam.learning_rate},
          {"beta1", c.adam.beta1},
          {"beta2", c.adam.beta2},
          {"epsilon", c.adam.epsilon}}},
        {"loss_scale", c.loss_scale},
        {"model", c.resolved_model()},
        {"seed", c.seed},
    };
}

void merge_json(const nlohmann::json& j, TrainConfig& c) {
    const auto set = [&j](const char* key, auto& field) {
        if (j.contains(key)) j.at(key).get_to(field);
    };
    if (j.contains("measure")) {
        const auto m = parse_measure(j.at("measure").get<std::string>());
        if (!m) throw std::invalid_argument("unknown measure in configuration");
        c.measure = *m;
    }
    set("epochs", c.epochs);
    set("base_graphs", c.base_graphs);
    set("growth_divisor", c.growth_divisor);
    set("inner_batches", c.inner_batches);
    set("train_n", c.train_n);
    set("momentum", c.momentum);
    set("samples", c.samples);
    set("loss_scale", c.loss_scale);
    set("seed", c.seed);
    if (j.contains("generators")) {
        c.generators.clear();
        for (const auto& name : j.at("generators")) {
            const auto kind = parse_model(name.get<std::string>());
            if (!kind) throw std::invalid_argument("unknown generator in configuration");
            c.generators.push_back(*kind);
        }
    }
    if (j.contains("densities")) {
        const auto& d = j.at("densities");
        const auto dset = [&d](const char* key, auto& field) {
            if (d.contains(key)) d.at(key).get_to(field);
        };
        dset("er_p_min", c.densities.er_p_min);
        dset("er_p_max", c.densities.er_p_max);
        dset("er_reference_n", c.densities.er_reference_n);
        dset("ba_k_min", c.densities.ba_k_min);
        dset("ba_k_max", c.densities.ba_k_max);
        dset("ws_k", c.densities.ws_k);
        dset("ws_p_min", c.densities.ws_p_min);
        dset("ws_p_max", c.densities.ws_p_max);
        dset("caveman_size_min", c.densities.caveman_size_min);
        dset("caveman_size_max", c.densities.caveman_size_max);
    }
    if (j.contains("adam")) {
        const auto& a = j.at("adam");
        if (a.contains("learning_rate")) a.at("learning_rate").get_to(c.adam.learning_rate);
        if (a.contains("beta1")) a.at("beta1").get_to(c.adam.beta1);
        if (a.contains("beta2")) a.at("beta2").get_to(c.adam.beta2);
        if (a.contains("epsilon")) a.at("epsilon").get_to(c.adam.epsilon);
    }
    if (j.contains("model")) {
        c.model = j.at("model").get<M5Config>();
    }
}

std::size_t graphs_per_epoch(const TrainConfig& config, std::size_t epoch) {
    return config.base_graphs + epoch / config.growth_divisor;
}

std::vector<TrainingGraph> epoch_graphs(const TrainConfig& config, std::size_t epoch, std::size_t* skipped) {
    constexpr std::size_t kMaxConsecutiveSkips = 1000;
    Rng rng(derive_seed(config.seed, epoch));
    const std::size_t wanted = graphs_per_epoch(config, epoch);
    std::vector<TrainingGraph> out;
    std::size_t dropped = 0;
    std::size_t streak = 0;
    while (out.size() < wanted) {
        TrainingGraph tg;
        const auto kind = config.generators[static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<std::int64_t>(config.generators.size()) - 1))];
        tg.model = sample_model(kind, config.train_n, rng, config.densities);
        tg.graph = giant_component(generate(tg.model, rng.next_u64()));

        bool usable = tg.graph.num_nodes() >= 2;
        if (usable) {
            try {
                tg.target = compute_centrality(tg.graph, config.measure);
                usable = !is_constant(tg.target.values);
            } catch (const ConvergenceError&) {
                usable = false;
            }
        }
        if (!usable) {
            ++dropped;
            if (++streak > kMaxConsecutiveSkips) {
                throw std::runtime_error("could not draw a graph with a non-constant " +
                                         std::string(measure_name(config.measure)) + " target");
            }
            continue;
        }
        streak = 0;
        tg.inputs = prepare_inputs<float>(auralize(tg.graph, config.momentum, config.samples),
                                          config.model.standardize_input);
        out.push_back(std::move(tg));
    }
    if (skipped) *skipped = dropped;
    return out;
}

TrainResult train(const TrainConfig& config, const ModelCheckpoint* resume, const EpochCallback& on_epoch) {
    config.validate();
    const M5Config model_config = config.resolved_model();

    TrainResult result;
    if (resume) {
        if (!(resume->config == model_config)) {
            throw std::invalid_argument("resume checkpoint architecture differs from the configuration");
        }
        result.checkpoint = *resume;
    } else {
        result.checkpoint = m5_init(model_config, derive_seed(config.seed, 0));
    }
    ModelCheckpoint& ckpt = result.checkpoint;
    ckpt.metadata.measure = std::string(measure_name(config.measure));
    ckpt.metadata.seed = config.seed;
    ckpt.metadata.train_config = config;

    M5Network<float> net = ckpt.network();
    Adam adam = ckpt.adam_first_moment.empty()
                    ? Adam(config.adam, net.parameters().size())
                    : Adam(config.adam, ckpt.adam_first_moment, ckpt.adam_second_moment,
                           ckpt.metadata.optimizer_steps);
    const double scale = config.loss_scale && config.inner_batches > 0
                             ? 1.0 / static_cast<double>(config.inner_batches)
                             : 1.0;

    for (std::size_t epoch = ckpt.metadata.epochs_completed + 1; epoch <= config.epochs; ++epoch) {
        EpochSummary summary;
        summary.epoch = epoch;
        double epoch_loss = 0.0;
        if (config.inner_batches > 0) {
            const auto graphs = epoch_graphs(config, epoch, &summary.skipped);
            summary.graphs = graphs.size();
            result.skipped_graphs += summary.skipped;
            const double per_graph = scale / static_cast<double>(graphs.size());

            typename M5Network<float>::Cache cache;
            std::vector<float> grad(net.parameters().size());
            std::vector<float> dout;
            for (std::size_t batch = 0; batch < config.inner_batches; ++batch) {
                std::fill(grad.begin(), grad.end(), 0.0f);
                double batch_loss = 0.0;
                for (const auto& tg : graphs) {
                    const std::size_t n = tg.graph.num_nodes();
                    const auto out = net.forward_train(tg.inputs, n, cache);
                    const std::vector<double> pred(out.begin(), out.end());
                    const auto lg = pearson_loss(tg.target.values, pred);
                    batch_loss += lg.loss;
                    dout.resize(n);
                    for (std::size_t i = 0; i < n; ++i) {
                        dout[i] = static_cast<float>(lg.grad[i] * per_graph);
                    }
                    const auto g = net.backward(cache, dout);
                    for (std::size_t i = 0; i < grad.size(); ++i) grad[i] += g[i];
                    net.update_running_stats(cache);
                }
                adam.step(net.parameters(), grad);
                batch_loss /= static_cast<double>(graphs.size());
                epoch_loss += batch_loss;
                summary.steps.push_back({adam.steps(), epoch, batch_loss});
            }
            summary.mean_loss = epoch_loss / static_cast<double>(config.inner_batches);
            result.history.insert(result.history.end(), summary.steps.begin(), summary.steps.end());
        }
        ckpt.parameters = net.parameters();
        ckpt.buffers = net.buffers();
        ckpt.adam_first_moment = adam.first_moment();
        ckpt.adam_second_moment = adam.second_moment();
        ckpt.metadata.optimizer_steps = adam.steps();
        ckpt.metadata.epochs_completed = epoch;
        if (on_epoch) on_epoch(summary, ckpt);
    }
    return result;
}

std::string loss_history_csv(const std::vector<LossRecord>& history, bool header) {
    std::string out = header ? "step,epoch,loss\n" : "";
    char buf[32];
    for (const auto& r : history) {
        out += std::to_string(r.step);
        out += ',';
        out += std::to_string(r.epoch);
        out += ',';
        const auto res = std::to_chars(buf, buf + sizeof(buf), r.loss);
        out.append(buf, res.ptr);
        out += '\n';
    }
    return out;
}

} // namespace netaural
