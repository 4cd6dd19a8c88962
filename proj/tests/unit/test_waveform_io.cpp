// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cstring>

#include <netaural/waveform_io.hpp>

#include "oracles.hpp"

using namespace netaural;

TEST(WaveformIo, RoundTripIsBitExact) {
    const auto w = auralize(oracle::cycle_graph(5), 0.99, 37);
    const auto bytes = encode_waveforms(w);
    EXPECT_EQ(bytes.size(), 24 + 37 * 5 * 8u);
    EXPECT_EQ(decode_waveforms(bytes), w);
}

TEST(WaveformIo, HeaderLayout) {
    WaveformMatrix w(2, 3);
    w.at(1, 2) = -1.5;
    const auto b = encode_waveforms(w);
    EXPECT_EQ(std::string(b.begin(), b.begin() + 4), "AURL");
    EXPECT_EQ(b[4], 1);  // version, little-endian
    EXPECT_EQ(b[8], 2);  // l
    EXPECT_EQ(b[16], 3); // n
    double last = 0;
    std::memcpy(&last, b.data() + b.size() - 8, 8);
    EXPECT_EQ(last, -1.5);
}

TEST(WaveformIo, RejectsCorruptInput) {
    const auto good = encode_waveforms(WaveformMatrix(3, 2));
    auto bad_magic = good;
    bad_magic[0] = 'X';
    EXPECT_THROW(decode_waveforms(bad_magic), FormatError);
    auto bad_version = good;
    bad_version[4] = 9;
    EXPECT_THROW(decode_waveforms(bad_version), FormatError);
    const std::vector<std::uint8_t> truncated(good.begin(), good.end() - 1);
    EXPECT_THROW(decode_waveforms(truncated), FormatError);
    auto trailing = good;
    trailing.push_back(0);
    EXPECT_THROW(decode_waveforms(trailing), FormatError);
    EXPECT_THROW(decode_waveforms(std::vector<std::uint8_t>{}), FormatError);
}

TEST(WaveformIo, TraceCsv) {
    const auto w = auralize(oracle::path_graph(3), 0.0, 4);
    EXPECT_EQ(waveform_trace_csv(w),
              "t,node_0,node_1,node_2\n"
              "1,-0.25,0.5,-0.25\n"
              "2,0.25,-0.5,0.25\n"
              "3,-0.25,0.5,-0.25\n"
              "4,0.25,-0.5,0.25\n");
}
