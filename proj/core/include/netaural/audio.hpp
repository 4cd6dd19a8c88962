// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "netaural/auralize.hpp"
#include "netaural/binary_io.hpp"

namespace netaural {

inline constexpr std::uint32_t kDefaultSampleRate = 11025;
inline constexpr double kDefaultPeak = 0.9;

/// Mono 16-bit PCM clip. Non-empty by construction.
class AudioClip {
public:
    AudioClip(std::vector<std::int16_t> samples, std::uint32_t sample_rate);

    const std::vector<std::int16_t>& samples() const { return samples_; }
    std::uint32_t sample_rate() const { return sample_rate_; }
    double duration_seconds() const {
        return static_cast<double>(samples_.size()) / static_cast<double>(sample_rate_);
    }

    friend bool operator==(const AudioClip&, const AudioClip&) = default;

private:
    std::vector<std::int16_t> samples_;
    std::uint32_t sample_rate_;
};

/// Peak-normalizes one node's waveform: sample = round(peak / max|v| * v * 32767).
/// An all-zero column renders as silence.
AudioClip waveform_to_clip(std::span<const double> column, std::uint32_t sample_rate = kDefaultSampleRate,
                           double peak = kDefaultPeak);

/// Canonical 44-byte-header RIFF/WAVE, PCM format 1, mono, 16-bit LE.
std::vector<std::uint8_t> write_wav(const AudioClip& clip);
/// Strict reader for exactly the layout write_wav produces; throws FormatError.
AudioClip parse_wav(std::span<const std::uint8_t> bytes);

/// Every node's clip in node-id order, each normalized on its own, separated
/// by `gap_seconds` of silence.
AudioClip concat_all_nodes(const WaveformMatrix& w, std::uint32_t sample_rate = kDefaultSampleRate,
                           double gap_seconds = 0.0, double peak = kDefaultPeak);

/// DFT magnitudes for bins 0..l/2.
std::vector<double> spectrum(std::span<const double> column);

struct Spectrogram {
    std::size_t frames = 0;
    std::size_t bins = 0;
    std::vector<double> magnitude;  // frames x bins, row-major

    double at(std::size_t frame, std::size_t bin) const { return magnitude[frame * bins + bin]; }
};

/// Hann-windowed STFT magnitudes; frames = 1 + (l - window) / hop, bins = window/2 + 1.
/// Throws std::invalid_argument if the column is shorter than the window.
Spectrogram spectrogram(std::span<const double> column, std::size_t window = 256, std::size_t hop = 128);

/// "bin,frequency_hz,node_0,..." with one row per spectrum bin.
std::string spectra_csv(const WaveformMatrix& w, std::uint32_t sample_rate = kDefaultSampleRate);
/// "frame,time_s,bin_0,..." one row per frame.
std::string spectrogram_csv(const Spectrogram& s, std::size_t hop,
                            std::uint32_t sample_rate = kDefaultSampleRate);

} // namespace netaural
