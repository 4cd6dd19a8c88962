// SPDX-License-Identifier: Apache-2.0
#include "netaural/generators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace netaural {

std::string_view model_name(ModelKind kind) {
    switch (kind) {
    case ModelKind::ER: return "er";
    case ModelKind::BA: return "ba";
    case ModelKind::WS: return "ws";
    case ModelKind::Caveman: return "caveman";
    case ModelKind::Grid: return "grid";
    }
    return "unknown";
}

std::optional<ModelKind> parse_model(std::string_view name) {
    for (auto kind : all_models()) {
        if (model_name(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

const std::vector<ModelKind>& all_models() {
    static const std::vector<ModelKind> kinds = {ModelKind::ER, ModelKind::BA, ModelKind::WS,
                                                 ModelKind::Caveman, ModelKind::Grid};
    return kinds;
}

Graph gen_er(std::size_t n, double p, std::uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("er: n must be at least 1");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("er: p must lie in [0, 1]");
    }
    Rng rng(seed);
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (rng.bernoulli(p)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, edges);
}

Graph gen_ba(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k < 1 || k >= n) {
        throw std::invalid_argument("ba: requires 1 <= k < n");
    }
    Rng rng(seed);
    std::vector<Edge> edges;
    // Every edge endpoint, so a uniform pick is a degree-proportional pick.
    std::vector<NodeId> endpoints;
    for (NodeId v = 1; v <= k; ++v) {
        edges.emplace_back(0, v);
        endpoints.push_back(0);
        endpoints.push_back(v);
    }
    std::vector<NodeId> targets;
    for (NodeId v = static_cast<NodeId>(k + 1); v < n; ++v) {
        targets.clear();
        while (targets.size() < k) {
            const auto pick = endpoints[static_cast<std::size_t>(
                rng.uniform_int(0, static_cast<std::int64_t>(endpoints.size()) - 1))];
            if (std::find(targets.begin(), targets.end(), pick) == targets.end()) {
                targets.push_back(pick);
            }
        }
        for (NodeId t : targets) {
            edges.emplace_back(t, v);
            endpoints.push_back(t);
            endpoints.push_back(v);
        }
    }
    return Graph(n, edges);
}

Graph gen_ws(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
    if (k % 2 != 0) {
        throw std::invalid_argument("ws: k must be even");
    }
    if (k == 0 || k >= n) {
        throw std::invalid_argument("ws: requires 0 < k < n");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("ws: p must lie in [0, 1]");
    }
    Rng rng(seed);
    GraphBuilder builder(n);
    for (std::size_t j = 1; j <= k / 2; ++j) {
        for (NodeId u = 0; u < n; ++u) {
            builder.add_edge(u, static_cast<NodeId>((u + j) % n));
        }
    }
    const auto last = static_cast<std::int64_t>(n) - 1;
    for (std::size_t j = 1; j <= k / 2; ++j) {
        for (NodeId u = 0; u < n; ++u) {
            if (!rng.bernoulli(p)) {
                continue;
            }
            if (builder.degree(u) >= n - 1) {
                continue;
            }
            NodeId w = u;
            do {
                w = static_cast<NodeId>(rng.uniform_int(0, last));
            } while (w == u || builder.has_edge(u, w));
            builder.remove_edge(u, static_cast<NodeId>((u + j) % n));
            builder.add_edge(u, w);
        }
    }
    return builder.build();
}

Graph gen_caveman(std::size_t cliques, std::size_t size) {
    if (cliques < 2 || size < 2) {
        throw std::invalid_argument("caveman: requires at least 2 cliques of size at least 2");
    }
    const std::size_t n = cliques * size;
    GraphBuilder builder(n);
    for (std::size_t c = 0; c < cliques; ++c) {
        const auto base = static_cast<NodeId>(c * size);
        for (NodeId i = 0; i < size; ++i) {
            for (NodeId j = i + 1; j < size; ++j) {
                builder.add_edge(base + i, base + j);
            }
        }
    }
    if (size == 2) {
        for (std::size_t c = 0; c + 1 < cliques; ++c) {
            builder.add_edge(static_cast<NodeId>(c * size + 1), static_cast<NodeId>((c + 1) * size));
        }
        return builder.build();
    }
    for (std::size_t c = 0; c < cliques; ++c) {
        const auto start = static_cast<NodeId>(c * size);
        builder.remove_edge(start, start + 1);
        builder.add_edge(start, static_cast<NodeId>((start + n - 1) % n));
    }
    return builder.build();
}

Graph gen_grid(std::size_t rows, std::size_t cols) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("grid: rows and cols must be at least 1");
    }
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const auto v = static_cast<NodeId>(r * cols + c);
            if (c + 1 < cols) {
                edges.emplace_back(v, v + 1);
            }
            if (r + 1 < rows) {
                edges.emplace_back(v, static_cast<NodeId>(v + cols));
            }
        }
    }
    return Graph(rows * cols, edges);
}

void GraphModel::validate() const {
    switch (kind) {
    case ModelKind::ER:
        if (n < 1) throw std::invalid_argument("er: n must be at least 1");
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("er: p must lie in [0, 1]");
        return;
    case ModelKind::BA:
        if (k < 1 || k >= n) throw std::invalid_argument("ba: requires 1 <= k < n");
        return;
    case ModelKind::WS:
        if (k % 2 != 0) throw std::invalid_argument("ws: k must be even");
        if (k == 0 || k >= n) throw std::invalid_argument("ws: requires 0 < k < n");
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("ws: p must lie in [0, 1]");
        return;
    case ModelKind::Caveman:
        if (cliques < 2 || size < 2)
            throw std::invalid_argument("caveman: requires at least 2 cliques of size at least 2");
        return;
    case ModelKind::Grid:
        if (rows < 1 || cols < 1) throw std::invalid_argument("grid: rows and cols must be at least 1");
        return;
    }
}

std::string GraphModel::describe() const {
    std::ostringstream os;
    os << model_name(kind);
    switch (kind) {
    case ModelKind::ER: os << "(n=" << n << ",p=" << p << ")"; break;
    case ModelKind::BA: os << "(n=" << n << ",k=" << k << ")"; break;
    case ModelKind::WS: os << "(n=" << n << ",k=" << k << ",p=" << p << ")"; break;
    case ModelKind::Caveman: os << "(cliques=" << cliques << ",size=" << size << ")"; break;
    case ModelKind::Grid: os << "(rows=" << rows << ",cols=" << cols << ")"; break;
    }
    return os.str();
}

Graph generate(const GraphModel& model, std::uint64_t seed) {
    model.validate();
    switch (model.kind) {
    case ModelKind::ER: return gen_er(model.n, model.p, seed);
    case ModelKind::BA: return gen_ba(model.n, model.k, seed);
    case ModelKind::WS: return gen_ws(model.n, model.k, model.p, seed);
    case ModelKind::Caveman: return gen_caveman(model.cliques, model.size);
    case ModelKind::Grid: return gen_grid(model.rows, model.cols);
    }
    throw std::invalid_argument("unknown graph model");
}

GraphModel sample_model(ModelKind kind, std::size_t n, Rng& rng, const DensityRanges& ranges) {
    if (n < 4) {
        throw std::invalid_argument("sample_model: n must be at least 4");
    }
    GraphModel m;
    m.kind = kind;
    m.n = n;
    const auto pick = [&rng](std::size_t lo, std::size_t hi) {
        return static_cast<std::size_t>(
            rng.uniform_int(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
    };
    switch (kind) {
    case ModelKind::ER: {
        const double p_ref = rng.uniform(ranges.er_p_min, ranges.er_p_max);
        const double scale = static_cast<double>(ranges.er_reference_n - 1) / static_cast<double>(n - 1);
        m.p = std::min(1.0, p_ref * scale);
        break;
    }
    case ModelKind::BA:
        m.k = pick(ranges.ba_k_min, std::min(ranges.ba_k_max, n - 1));
        break;
    case ModelKind::WS: {
        std::vector<std::size_t> ks;
        std::copy_if(ranges.ws_k.begin(), ranges.ws_k.end(), std::back_inserter(ks),
                     [n](std::size_t k) { return k > 0 && k % 2 == 0 && k < n; });
        if (ks.empty()) {
            ks.push_back(2);
        }
        m.k = ks[pick(0, ks.size() - 1)];
        m.p = rng.uniform(ranges.ws_p_min, ranges.ws_p_max);
        break;
    }
    case ModelKind::Caveman: {
        const std::size_t hi = std::max<std::size_t>(
            2, std::min(ranges.caveman_size_max, n / 2));
        const std::size_t lo = std::min(std::max<std::size_t>(2, ranges.caveman_size_min), hi);
        m.size = pick(lo, hi);
        m.cliques = std::max<std::size_t>(
            2, static_cast<std::size_t>(std::lround(static_cast<double>(n) / static_cast<double>(m.size))));
        break;
    }
    case ModelKind::Grid: {
        const double root = std::sqrt(static_cast<double>(n));
        const auto hi = std::max<std::size_t>(2, static_cast<std::size_t>(std::floor(root)));
        const auto lo = std::min(hi, std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(root / 3.0))));
        m.rows = pick(lo, hi);
        m.cols = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::lround(static_cast<double>(n) / static_cast<double>(m.rows))));
        break;
    }
    }
    return m;
}

} // namespace netaural
