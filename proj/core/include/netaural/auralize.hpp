// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "netaural/graph.hpp"

namespace netaural {

/// Degree denominator guard; only changes the result for isolated nodes.
inline constexpr double kPowerEpsilon = 1e-32;
inline constexpr double kDefaultMomentum = 0.99;
inline constexpr std::size_t kDefaultSamples = 10000;

/**
 * Energy-exchange state over the directed versions of a graph's edges.
 *
 * Entry i of power/flow belongs to the directed edge (u, graph.targets()[i])
 * where i lies in u's CSR row; reverse[i] is the index of (v, u).
 */
struct FlowState {
    std::vector<std::size_t> offsets;
    std::vector<NodeId> targets;
    std::vector<std::size_t> reverse;
    /// P(u, v) = A(u, v) / (D(u) + eps); rows of non-isolated nodes sum to 1.
    std::vector<double> power;
    /// Energy pushed along each directed edge in the last step.
    std::vector<double> flow;
    double momentum = 0.0;

    std::size_t num_nodes() const { return offsets.size() - 1; }
};

/// Builds the power matrix with zero flow.
FlowState power_matrix(const Graph& g, double momentum = 0.0, double eps = kPowerEpsilon);

/// One step of the momentum energy exchange. Updates state.flow in place and
/// writes the new potentials to s_next. Sums over neighbors run in ascending
/// neighbor id. Throws std::invalid_argument on size mismatch.
void flow_step(FlowState& state, std::span<const double> s_prev, std::span<double> s_next);

/// l x n matrix of node potentials, row t = time step, column v = node.
class WaveformMatrix {
public:
    WaveformMatrix() = default;
    WaveformMatrix(std::size_t samples, std::size_t nodes)
        : samples_(samples), nodes_(nodes), data_(samples * nodes, 0.0) {}

    std::size_t samples() const { return samples_; }
    std::size_t nodes() const { return nodes_; }

    double& at(std::size_t t, std::size_t v) { return data_[t * nodes_ + v]; }
    double at(std::size_t t, std::size_t v) const { return data_[t * nodes_ + v]; }

    std::span<double> row(std::size_t t) { return {data_.data() + t * nodes_, nodes_}; }
    std::span<const double> row(std::size_t t) const { return {data_.data() + t * nodes_, nodes_}; }
    std::vector<double> column(std::size_t v) const;

    /// Row-major storage.
    std::span<const double> data() const { return data_; }
    std::span<double> data() { return data_; }

    friend bool operator==(const WaveformMatrix&, const WaveformMatrix&) = default;

private:
    std::size_t samples_ = 0;
    std::size_t nodes_ = 0;
    std::vector<double> data_;
};

/// Impulse response before DC removal: starts from all-ones potentials with
/// zero flow and records S_1..S_l (the impulse row itself is not emitted).
WaveformMatrix auralize_raw(const Graph& g, double momentum, std::size_t samples);

/// Subtracts each column's time mean in place.
void remove_dc(WaveformMatrix& w);

/// Network auralization: auralize_raw followed by remove_dc.
/// Throws std::invalid_argument for samples == 0 or momentum outside [0, 1].
WaveformMatrix auralize(const Graph& g, double momentum = kDefaultMomentum,
                        std::size_t samples = kDefaultSamples);

/// Literal dense n x n transcription of the recurrence, kept as an
/// independent reference for differential testing. Limited to n <= 64.
WaveformMatrix auralize_dense_oracle(const Graph& g, double momentum, std::size_t samples,
                                     bool dc_removal = true);

} // namespace netaural
