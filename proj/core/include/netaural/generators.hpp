// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netaural/graph.hpp"
#include "netaural/rng.hpp"

namespace netaural {

enum class ModelKind { ER, BA, WS, Caveman, Grid };

std::string_view model_name(ModelKind kind);
/// Accepts the lowercase names "er", "ba", "ws", "caveman", "grid".
std::optional<ModelKind> parse_model(std::string_view name);
const std::vector<ModelKind>& all_models();

/// Erdos-Renyi G(n, p). Throws std::invalid_argument for p outside [0, 1].
Graph gen_er(std::size_t n, double p, std::uint64_t seed);

/// Barabasi-Albert preferential attachment seeded with a star on k+1 nodes;
/// yields exactly k*(n-k) edges. Requires 1 <= k < n.
Graph gen_ba(std::size_t n, std::size_t k, std::uint64_t seed);

/// Watts-Strogatz: ring lattice with k/2 neighbors per side, each lattice
/// edge rewired with probability p. Edge count stays n*k/2; the result may
/// be disconnected. Requires even k with 0 < k < n.
Graph gen_ws(std::size_t n, std::size_t k, double p, std::uint64_t seed);

/// Connected caveman graph: `cliques` cliques of `size` nodes, one edge per
/// clique rewired to the preceding clique so the ring of caves is connected.
/// For size 2 (single-edge caves) consecutive caves are instead joined by an
/// added edge, giving a path.
Graph gen_caveman(std::size_t cliques, std::size_t size);

/// rows x cols lattice, node id r*cols + c.
Graph gen_grid(std::size_t rows, std::size_t cols);

/// A fully parameterised generator call.
struct GraphModel {
    ModelKind kind = ModelKind::ER;
    std::size_t n = 0;        // ER, BA, WS
    double p = 0.0;           // ER edge probability, WS rewiring probability
    std::size_t k = 0;        // BA edges per node, WS ring neighbors
    std::size_t cliques = 0;  // caveman
    std::size_t size = 0;     // caveman clique size
    std::size_t rows = 0;     // grid
    std::size_t cols = 0;     // grid

    /// Throws std::invalid_argument when parameters are invalid for the kind.
    void validate() const;
    std::string describe() const;
};

Graph generate(const GraphModel& model, std::uint64_t seed);

/// Ranges from which training and test graphs draw their densities.
struct DensityRanges {
    /// ER expected degree range, expressed as edge probabilities at the
    /// reference size (p = probability * (reference_n - 1) / (n - 1)).
    double er_p_min = 0.02;
    double er_p_max = 0.1;
    std::size_t er_reference_n = 150;
    std::size_t ba_k_min = 1;
    std::size_t ba_k_max = 5;
    std::vector<std::size_t> ws_k = {2, 4, 6};
    double ws_p_min = 0.1;
    double ws_p_max = 0.5;
    std::size_t caveman_size_min = 4;
    std::size_t caveman_size_max = 30;
};

/// Draws generator parameters for a graph of roughly n nodes.
GraphModel sample_model(ModelKind kind, std::size_t n, Rng& rng,
                        const DensityRanges& ranges = {});

} // namespace netaural
