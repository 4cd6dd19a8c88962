// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "netaural/auralize.hpp"
#include "netaural/binary_io.hpp"
#include "netaural/centrality.hpp"
#include "netaural/m5.hpp"

namespace netaural {

inline constexpr std::uint32_t kCheckpointFormatVersion = 1;

/// A tensor's stored shape disagrees with the configuration it is loaded under.
class ShapeError : public FormatError {
public:
    using FormatError::FormatError;
};

struct TrainingMetadata {
    std::string measure;
    std::uint64_t seed = 0;
    std::size_t epochs_completed = 0;
    std::size_t optimizer_steps = 0;
    /// Resolved training configuration, free-form.
    nlohmann::json train_config = nlohmann::json::object();

    friend bool operator==(const TrainingMetadata&, const TrainingMetadata&) = default;
};

/// Parameters, running statistics and (optionally) optimizer moments of an
/// M5 regressor, all in 32-bit float, in M5Layout order.
struct ModelCheckpoint {
    M5Config config;
    std::vector<float> parameters;
    std::vector<float> buffers;
    std::vector<float> adam_first_moment;   // empty or parameters.size()
    std::vector<float> adam_second_moment;  // empty or parameters.size()
    TrainingMetadata metadata;

    M5Network<float> network() const { return {config, parameters, buffers}; }

    /// Bitwise comparison of every field (float payloads compared as bits).
    bool bitwise_equal(const ModelCheckpoint& other) const;
};

/// Fresh checkpoint with deterministic initialization. Throws
/// std::invalid_argument for an invalid configuration.
ModelCheckpoint m5_init(const M5Config& config, std::uint64_t seed);

/// Evaluation-mode predictions, one per node. Throws std::invalid_argument if
/// the waveform length differs from config.input_length.
CentralityVector m5_forward(const ModelCheckpoint& ckpt, const WaveformMatrix& w);

/**
 * Binary container:
 *   "M5CK" | u32 version | u32 header length | header JSON (config, metadata)
 *   | u32 tensor count | per tensor: u16 name length, name, u32 rank,
 *   rank x u64 dims, f32 payload
 * All integers and floats little-endian.
 */
std::vector<std::uint8_t> save_checkpoint(const ModelCheckpoint& ckpt);

/// Throws FormatError for bad magic, unknown version or truncation, and
/// ShapeError when a tensor does not fit the stored configuration or, if
/// given, the expected one.
ModelCheckpoint load_checkpoint(std::span<const std::uint8_t> bytes,
                                const M5Config* expected = nullptr);

void save_checkpoint_file(const ModelCheckpoint& ckpt, const std::string& path);
ModelCheckpoint load_checkpoint_file(const std::string& path, const M5Config* expected = nullptr);

} // namespace netaural
