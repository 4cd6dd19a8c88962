// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "netaural/auralize.hpp"
#include "netaural/binary_io.hpp"

namespace netaural {

inline constexpr std::uint32_t kWaveformFormatVersion = 1;

/// "AURL" | u32 version | u64 samples | u64 nodes | f64 payload (row-major),
/// all little-endian. Header is 24 bytes.
std::vector<std::uint8_t> encode_waveforms(const WaveformMatrix& w);
/// Throws FormatError on bad magic, unknown version or truncated payload.
WaveformMatrix decode_waveforms(std::span<const std::uint8_t> bytes);

/// CSV with header "t,node_0,...,node_{n-1}" and one row per recorded step,
/// t counted from 1. Values printed with round-trip precision.
std::string waveform_trace_csv(const WaveformMatrix& w);

} // namespace netaural
