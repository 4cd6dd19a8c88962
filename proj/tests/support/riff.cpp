// SPDX-License-Identifier: Apache-2.0
#include "riff.hpp"

namespace riff {

namespace {

std::uint32_t u32(std::span<const std::uint8_t> b, std::size_t at) {
    return static_cast<std::uint32_t>(b[at]) | static_cast<std::uint32_t>(b[at + 1]) << 8 |
           static_cast<std::uint32_t>(b[at + 2]) << 16 | static_cast<std::uint32_t>(b[at + 3]) << 24;
}

std::uint16_t u16(std::span<const std::uint8_t> b, std::size_t at) {
    return static_cast<std::uint16_t>(b[at] | b[at + 1] << 8);
}

std::string tag(std::span<const std::uint8_t> b, std::size_t at) {
    return std::string(reinterpret_cast<const char*>(b.data() + at), 4);
}

} // namespace

std::optional<Wave> parse(std::span<const std::uint8_t> b) {
    if (b.size() < 12 || tag(b, 0) != "RIFF" || tag(b, 8) != "WAVE") return std::nullopt;
    Wave w;
    w.riff_size = u32(b, 4);
    if (w.riff_size + 8 != b.size()) return std::nullopt;
    std::size_t at = 12;
    while (at < b.size()) {
        if (at + 8 > b.size()) return std::nullopt;
        Chunk c{tag(b, at), u32(b, at + 4), at + 8};
        if (c.offset + c.size > b.size()) return std::nullopt;
        w.chunks.push_back(c);
        at = c.offset + c.size + (c.size & 1u);
    }
    bool have_fmt = false;
    bool have_data = false;
    for (const auto& c : w.chunks) {
        if (c.id == "fmt ") {
            if (c.size < 16) return std::nullopt;
            w.format = u16(b, c.offset);
            w.channels = u16(b, c.offset + 2);
            w.sample_rate = u32(b, c.offset + 4);
            w.byte_rate = u32(b, c.offset + 8);
            w.block_align = u16(b, c.offset + 12);
            w.bits = u16(b, c.offset + 14);
            have_fmt = true;
        } else if (c.id == "data") {
            if (!have_fmt || w.bits != 16 || c.size % 2 != 0) return std::nullopt;
            for (std::size_t i = 0; i < c.size; i += 2) {
                w.samples.push_back(static_cast<std::int16_t>(u16(b, c.offset + i)));
            }
            have_data = true;
        }
    }
    if (!have_fmt || !have_data) return std::nullopt;
    return w;
}

} // namespace riff
