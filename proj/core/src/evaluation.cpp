// SPDX-License-Identifier: Apache-2.0
#include "netaural/evaluation.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <stdexcept>

#include "netaural/datasets.hpp"
#include "netaural/edge_list.hpp"
#include "netaural/pearson.hpp"
#include "netaural/rng.hpp"

namespace netaural {

std::string_view tier_name(Tier t) {
    switch (t) {
    case Tier::Small: return "small";
    case Tier::Large: return "large";
    case Tier::Real: return "real";
    }
    return "unknown";
}

std::optional<Tier> parse_tier(std::string_view name) {
    for (auto t : {Tier::Small, Tier::Large, Tier::Real}) {
        if (tier_name(t) == name) return t;
    }
    return std::nullopt;
}

TestSet build_testset(Tier tier, std::uint64_t seed, const TestSetOptions& options) {
    TestSet set;
    set.tier = tier;
    if (tier == Tier::Real) {
        for (const auto& name : dataset_names()) {
            set.graphs.push_back({name, "real", bundled_graph(name).graph});
        }
        if (options.internet_edge_list) {
            set.graphs.push_back({"internet", "real", load_edge_list_file(*options.internet_edge_list).graph});
        } else {
            set.notes.emplace_back("no Internet topology edge list supplied; AS-level graph omitted");
        }
        return set;
    }
    const std::size_t n = tier == Tier::Small ? options.small_n : options.large_n;
    // Separate stream per tier so small and large sets never share draws.
    Rng rng(derive_seed(seed, tier == Tier::Small ? 0x5a11ULL : 0x1a26eULL));
    for (auto kind : options.models) {
        for (std::size_t i = 0; i < options.per_model; ++i) {
            const auto model = sample_model(kind, n, rng, options.densities);
            set.graphs.push_back({std::string(model_name(kind)) + "-" + std::to_string(i),
                                  std::string(model_name(kind)),
                                  giant_component(generate(model, rng.next_u64()))});
        }
    }
    return set;
}

std::vector<EvalAggregate> EvalReport::aggregates() const {
    std::vector<std::string> order;
    std::map<std::string, std::vector<const EvalRecord*>> groups;
    for (const auto& r : records) {
        if (!groups.count(r.family)) order.push_back(r.family);
        groups[r.family].push_back(&r);
        groups["all"].push_back(&r);
    }
    order.emplace_back("all");
    std::vector<EvalAggregate> out;
    for (const auto& family : order) {
        EvalAggregate agg;
        agg.family = family;
        double sum = 0.0;
        double lo = std::numeric_limits<double>::infinity();
        std::size_t valid = 0;
        for (const auto* r : groups[family]) {
            ++agg.count;
            if (!r->rho) {
                ++agg.degenerate;
                continue;
            }
            ++valid;
            sum += *r->rho;
            lo = std::min(lo, *r->rho);
        }
        agg.mean = valid ? sum / static_cast<double>(valid) : 0.0;
        agg.min = valid ? lo : 0.0;
        out.push_back(agg);
    }
    return out;
}

EvalReport evaluate_with(const Predictor& predictor, const TestSet& tests, Measure measure,
                         const EvalOptions& options) {
    EvalReport report;
    report.tier = tests.tier;
    report.measure = measure;
    report.notes = tests.notes;
    bool flagged = false;
    for (const auto& tg : tests.graphs) {
        EvalRecord rec{tg.id, tg.family, tg.graph.num_nodes(), measure, std::nullopt};
        if ((tg.family == "grid" || tg.family == "caveman") && !flagged) {
            report.notes.emplace_back(
                "grid and caveman graphs have low structural variability; train/test leakage likely");
            flagged = true;
        }
        std::optional<CentralityVector> truth;
        try {
            truth = compute_centrality(tg.graph, measure);
        } catch (const ConvergenceError&) {
        }
        if (truth && tg.graph.num_nodes() >= 2 && !is_constant(truth->values)) {
            const auto w = auralize(tg.graph, options.momentum, options.samples);
            const auto pred = predictor(tg, w);
            if (!is_constant(pred)) {
                rec.rho = pearson(truth->values, pred);
            }
        }
        report.records.push_back(std::move(rec));
    }
    return report;
}

EvalReport evaluate(const ModelCheckpoint& ckpt, const TestSet& tests, Measure measure,
                    const EvalOptions& options) {
    if (options.samples != ckpt.config.input_length) {
        throw std::invalid_argument("evaluation sample count " + std::to_string(options.samples) +
                                    " does not match model input length " +
                                    std::to_string(ckpt.config.input_length));
    }
    const auto net = ckpt.network();
    return evaluate_with(
        [&](const TestGraph&, const WaveformMatrix& w) {
            const auto inputs = prepare_inputs<float>(w, ckpt.config.standardize_input);
            const auto out = net.forward(inputs, w.nodes());
            return std::vector<double>(out.begin(), out.end());
        },
        tests, measure, options);
}

Predictor ground_truth_predictor(Measure measure) {
    return [measure](const TestGraph& tg, const WaveformMatrix&) {
        return compute_centrality(tg.graph, measure).values;
    };
}

nlohmann::json report_json(const EvalReport& report) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : report.records) {
        records.push_back({{"graph", r.graph_id},
                           {"family", r.family},
                           {"n", r.n},
                           {"measure", measure_name(r.measure)},
                           {"rho", r.rho ? nlohmann::json(*r.rho) : nlohmann::json(nullptr)},
                           {"degenerate", !r.rho.has_value()}});
    }
    nlohmann::json aggregates = nlohmann::json::array();
    for (const auto& a : report.aggregates()) {
        aggregates.push_back({{"family", a.family},
                              {"count", a.count},
                              {"degenerate", a.degenerate},
                              {"mean", a.mean},
                              {"min", a.min}});
    }
    return {{"tier", tier_name(report.tier)},
            {"measure", measure_name(report.measure)},
            {"records", records},
            {"aggregates", aggregates},
            {"notes", report.notes}};
}

namespace {

void append_rho(std::string& out, const std::optional<double>& rho) {
    if (!rho) return;
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), *rho);
    out.append(buf, res.ptr);
}

} // namespace

std::string report_csv(const EvalReport& report) {
    std::string out = "graph,family,n,measure,rho\n";
    for (const auto& r : report.records) {
        out += r.graph_id + ',' + r.family + ',' + std::to_string(r.n) + ',' +
               std::string(measure_name(r.measure)) + ',';
        append_rho(out, r.rho);
        out += '\n';
    }
    return out;
}

std::string correlation_matrix_csv(const std::vector<EvalReport>& reports) {
    std::vector<const EvalReport*> columns;
    for (auto m : target_measures()) {
        for (const auto& r : reports) {
            if (r.measure == m) {
                columns.push_back(&r);
                break;
            }
        }
    }
    std::vector<std::pair<std::string, std::string>> rows;  // (tier, graph id)
    std::map<std::pair<std::string, std::string>, std::map<const EvalReport*, std::optional<double>>> cells;
    for (const auto& report : reports) {
        for (const auto& rec : report.records) {
            const auto key = std::make_pair(std::string(tier_name(report.tier)), rec.graph_id);
            if (!cells.count(key)) rows.push_back(key);
            cells[key][&report] = rec.rho;
        }
    }
    std::string out = "tier,network";
    for (const auto* c : columns) {
        out += ',';
        out += measure_short_name(c->measure);
    }
    out += '\n';
    for (const auto& key : rows) {
        out += key.first + ',' + key.second;
        for (const auto* c : columns) {
            out += ',';
            // Reports for the same measure on different tiers share a column.
            for (const auto& report : reports) {
                if (report.measure != c->measure) continue;
                const auto it = cells[key].find(&report);
                if (it != cells[key].end()) append_rho(out, it->second);
            }
        }
        out += '\n';
    }
    return out;
}

} // namespace netaural
