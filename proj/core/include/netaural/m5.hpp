// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "netaural/auralize.hpp"

namespace netaural {

/// Architecture of the M5 waveform regressor.
struct M5Config {
    std::size_t input_length = kDefaultSamples;
    std::size_t first_kernel = 80;
    std::size_t first_stride = 4;
    std::vector<std::size_t> stage_channels = {128, 128, 256, 512};
    std::size_t later_kernel = 3;
    std::size_t pool = 4;
    std::size_t output_dim = 1;
    /// Divide each graph's waveforms by their overall standard deviation
    /// before the first layer. Off by default.
    bool standardize_input = false;

    /// Throws std::invalid_argument if the configuration is unusable.
    void validate() const;

    friend bool operator==(const M5Config&, const M5Config&) = default;
};

void to_json(nlohmann::json& j, const M5Config& c);
void from_json(const nlohmann::json& j, M5Config& c);

/// Channel layout [16, 16, 32, 32] used for desk-scale experiments.
M5Config small_m5_config(std::size_t input_length);

struct TensorSpec {
    std::string name;
    std::vector<std::size_t> shape;
    std::size_t offset = 0;
    std::size_t size = 0;
};

/// One conv -> batch norm -> ReLU -> max-pool block.
struct M5Stage {
    std::size_t in_channels = 0;
    std::size_t out_channels = 0;
    std::size_t kernel = 0;
    std::size_t stride = 1;
    std::size_t padding = 0;
    std::size_t in_length = 0;
    std::size_t conv_length = 0;
    std::size_t pooled_length = 0;
    // Offsets into the flat parameter vector.
    std::size_t weight = 0, bias = 0, gamma = 0, beta = 0;
    // Offsets into the flat buffer vector.
    std::size_t running_mean = 0, running_var = 0;
};

/**
 * Flat parameter/buffer layout derived from an M5Config.
 *
 * Parameters: conv{i}.weight (C_out, C_in, K), conv{i}.bias, bn{i}.weight,
 * bn{i}.bias for each stage, then fc.weight (1, C_last) and fc.bias (1).
 * Buffers: bn{i}.running_mean and bn{i}.running_var.
 * Pooling uses ceil mode so every stage keeps at least one sample.
 */
class M5Layout {
public:
    explicit M5Layout(const M5Config& config);

    const M5Config& config() const { return config_; }
    const std::vector<M5Stage>& stages() const { return stages_; }
    const std::vector<TensorSpec>& parameters() const { return parameters_; }
    const std::vector<TensorSpec>& buffers() const { return buffers_; }
    std::size_t parameter_count() const { return parameter_count_; }
    std::size_t buffer_count() const { return buffer_count_; }
    std::size_t fc_weight() const { return fc_weight_; }
    std::size_t fc_bias() const { return fc_bias_; }

private:
    M5Config config_;
    std::vector<M5Stage> stages_;
    std::vector<TensorSpec> parameters_;
    std::vector<TensorSpec> buffers_;
    std::size_t parameter_count_ = 0;
    std::size_t buffer_count_ = 0;
    std::size_t fc_weight_ = 0;
    std::size_t fc_bias_ = 0;
};

inline constexpr double kBatchNormEpsilon = 1e-5;
inline constexpr double kBatchNormMomentum = 0.1;

/**
 * M5 forward/backward over a batch of node waveforms.
 *
 * Inputs are n x input_length, row-major (one row per node). Every node is
 * an independent sample; in training mode the batch-norm statistics are
 * taken over all nodes of the batch (one graph), in evaluation mode the
 * running statistics are used and nodes do not interact at all.
 */
template <typename T>
class M5Network {
public:
    M5Network(M5Config config, std::vector<T> parameters, std::vector<T> buffers);

    /// He-normal conv weights, uniform fc weights, zero biases, identity
    /// batch norm. Deterministic in seed.
    static M5Network initialized(const M5Config& config, std::uint64_t seed);

    const M5Layout& layout() const { return layout_; }
    const std::vector<T>& parameters() const { return params_; }
    std::vector<T>& parameters() { return params_; }
    const std::vector<T>& buffers() const { return buffers_; }
    std::vector<T>& buffers() { return buffers_; }

    /// Evaluation-mode forward; one output per node.
    std::vector<T> forward(std::span<const T> inputs, std::size_t n) const;

    /// Everything backward() needs from a training-mode forward pass.
    struct Cache {
        std::size_t n = 0;
        struct StageCache {
            std::vector<T> input;                  // n x C_in x L_in
            std::vector<T> normalized;             // n x C x L_conv (x-hat)
            std::vector<std::uint32_t> argmax;     // n x C x L_pool
            std::vector<double> mean, var, invstd; // per channel
        };
        std::vector<StageCache> stages;
        std::vector<T> pooled;                     // n x C_last
    };

    /// Training-mode forward using batch statistics. Does not touch the
    /// running statistics; see update_running_stats().
    std::vector<T> forward_train(std::span<const T> inputs, std::size_t n, Cache& cache) const;

    /// Gradient of sum_i grad_output[i] * output[i] with respect to every
    /// parameter, in flat-parameter order.
    std::vector<T> backward(const Cache& cache, std::span<const T> grad_output) const;

    /// Folds a training pass's batch statistics into the running averages.
    void update_running_stats(const Cache& cache, double momentum = kBatchNormMomentum);

private:
    M5Layout layout_;
    std::vector<T> params_;
    std::vector<T> buffers_;
};

extern template class M5Network<float>;
extern template class M5Network<double>;

/// Column-per-node model input from a waveform matrix (n x l, row-major),
/// optionally scaled to unit overall standard deviation.
template <typename T>
std::vector<T> prepare_inputs(const WaveformMatrix& w, bool standardize);

} // namespace netaural
