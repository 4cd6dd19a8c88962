// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace netaural {

/// Thrown for truncated, corrupted or incompatible binary files.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

template <typename T>
void put_le(std::vector<std::uint8_t>& out, T value) {
    static_assert(std::is_trivially_copyable_v<T>);
    std::uint8_t bytes[sizeof(T)];
    std::memcpy(bytes, &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) {
        for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(bytes[sizeof(T) - 1 - i]);
    } else {
        out.insert(out.end(), bytes, bytes + sizeof(T));
    }
}

/// Bounds-checked little-endian cursor over a byte buffer.
class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    template <typename T>
    T get() {
        need(sizeof(T));
        std::uint8_t tmp[sizeof(T)];
        if constexpr (std::endian::native == std::endian::big) {
            for (std::size_t i = 0; i < sizeof(T); ++i) tmp[i] = bytes_[pos_ + sizeof(T) - 1 - i];
        } else {
            std::memcpy(tmp, bytes_.data() + pos_, sizeof(T));
        }
        pos_ += sizeof(T);
        T value;
        std::memcpy(&value, tmp, sizeof(T));
        return value;
    }

    std::string get_string(std::size_t len) {
        need(len);
        std::string s(reinterpret_cast<const char*>(bytes_.data() + pos_), len);
        pos_ += len;
        return s;
    }

    std::size_t remaining() const { return bytes_.size() - pos_; }

private:
    void need(std::size_t len) const {
        if (bytes_.size() - pos_ < len) {
            throw FormatError("truncated input");
        }
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

} // namespace detail

std::vector<std::uint8_t> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, std::span<const std::uint8_t> bytes);

} // namespace netaural
