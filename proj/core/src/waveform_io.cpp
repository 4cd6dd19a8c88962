// SPDX-License-Identifier: Apache-2.0
#include "netaural/waveform_io.hpp"

#include <charconv>

namespace netaural {

std::vector<std::uint8_t> encode_waveforms(const WaveformMatrix& w) {
    std::vector<std::uint8_t> out{'A', 'U', 'R', 'L'};
    out.reserve(24 + w.data().size() * 8);
    detail::put_le<std::uint32_t>(out, kWaveformFormatVersion);
    detail::put_le<std::uint64_t>(out, w.samples());
    detail::put_le<std::uint64_t>(out, w.nodes());
    for (double x : w.data()) {
        detail::put_le(out, x);
    }
    return out;
}

WaveformMatrix decode_waveforms(std::span<const std::uint8_t> bytes) {
    detail::ByteReader in(bytes);
    if (in.get_string(4) != "AURL") {
        throw FormatError("not a waveform file (bad magic)");
    }
    const auto version = in.get<std::uint32_t>();
    if (version != kWaveformFormatVersion) {
        throw FormatError("unsupported waveform format version " + std::to_string(version));
    }
    const auto samples = in.get<std::uint64_t>();
    const auto nodes = in.get<std::uint64_t>();
    if (nodes != 0 && samples > in.remaining() / 8 / nodes) {
        throw FormatError("truncated waveform payload");
    }
    WaveformMatrix w(samples, nodes);
    for (auto& x : w.data()) {
        x = in.get<double>();
    }
    if (in.remaining() != 0) {
        throw FormatError("trailing bytes after waveform payload");
    }
    return w;
}

std::string waveform_trace_csv(const WaveformMatrix& w) {
    std::string out = "t";
    for (std::size_t v = 0; v < w.nodes(); ++v) {
        out += ",node_" + std::to_string(v);
    }
    out += '\n';
    char buf[32];
    for (std::size_t t = 0; t < w.samples(); ++t) {
        out += std::to_string(t + 1);
        for (double x : w.row(t)) {
            const auto res = std::to_chars(buf, buf + sizeof(buf), x);
            out += ',';
            out.append(buf, res.ptr);
        }
        out += '\n';
    }
    return out;
}

} // namespace netaural
