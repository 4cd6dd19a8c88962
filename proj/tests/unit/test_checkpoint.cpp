// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include <netaural/checkpoint.hpp>

using namespace netaural;

namespace {

M5Config tiny_config() {
    M5Config c;
    c.input_length = 400;
    c.stage_channels = {4, 4, 8, 8};
    return c;
}

ModelCheckpoint populated() {
    auto ckpt = m5_init(tiny_config(), 3);
    ckpt.adam_first_moment.assign(ckpt.parameters.size(), 0.25f);
    ckpt.adam_second_moment.assign(ckpt.parameters.size(), -0.0f);
    ckpt.buffers[0] = 1e-30f;
    ckpt.metadata.measure = "betweenness";
    ckpt.metadata.seed = 77;
    ckpt.metadata.epochs_completed = 4;
    ckpt.metadata.optimizer_steps = 40;
    ckpt.metadata.train_config = {{"epochs", 10}};
    return ckpt;
}

} // namespace

TEST(Checkpoint, RoundTripIsBitwise) {
    const auto ckpt = populated();
    const auto bytes = save_checkpoint(ckpt);
    const auto back = load_checkpoint(bytes);
    EXPECT_TRUE(back.bitwise_equal(ckpt));
    EXPECT_EQ(back.metadata, ckpt.metadata);
    EXPECT_EQ(save_checkpoint(back), bytes);
}

TEST(Checkpoint, WithoutOptimizerState) {
    const auto ckpt = m5_init(tiny_config(), 1);
    const auto back = load_checkpoint(save_checkpoint(ckpt));
    EXPECT_TRUE(back.adam_first_moment.empty());
    EXPECT_TRUE(back.bitwise_equal(ckpt));
}

TEST(Checkpoint, CorruptMagic) {
    auto bytes = save_checkpoint(populated());
    bytes[1] = '6';
    EXPECT_THROW(load_checkpoint(bytes), FormatError);
}

TEST(Checkpoint, UnknownVersion) {
    auto bytes = save_checkpoint(populated());
    bytes[4] = 99;
    EXPECT_THROW(load_checkpoint(bytes), FormatError);
}

TEST(Checkpoint, Truncated) {
    const auto bytes = save_checkpoint(populated());
    for (std::size_t cut : {std::size_t{3}, std::size_t{20}, bytes.size() / 2, bytes.size() - 1}) {
        const std::vector<std::uint8_t> part(bytes.begin(), bytes.begin() + static_cast<long>(cut));
        EXPECT_THROW(load_checkpoint(part), FormatError) << cut;
    }
}

TEST(Checkpoint, ShapeMismatchAgainstExpectedConfig) {
    const auto full = m5_init(M5Config{}, 1);
    const auto bytes = save_checkpoint(full);
    M5Config other;
    other.stage_channels = {64, 64, 128, 256};
    EXPECT_THROW(load_checkpoint(bytes, &other), ShapeError);
    const M5Config same;
    EXPECT_NO_THROW(load_checkpoint(bytes, &same));
}

TEST(Checkpoint, DifferentLengthSameShapesRejected) {
    const auto bytes = save_checkpoint(m5_init(tiny_config(), 1));
    M5Config longer = tiny_config();
    longer.input_length = 800;
    EXPECT_THROW(load_checkpoint(bytes, &longer), FormatError);
}

TEST(Checkpoint, FileRoundTrip) {
    const auto path = std::filesystem::temp_directory_path() / "netaural_ckpt_test.m5ck";
    const auto ckpt = populated();
    save_checkpoint_file(ckpt, path.string());
    EXPECT_TRUE(load_checkpoint_file(path.string()).bitwise_equal(ckpt));
    std::filesystem::remove(path);
    EXPECT_THROW(load_checkpoint_file(path.string()), std::runtime_error);
}

TEST(Checkpoint, BitwiseEqualDistinguishesSignedZero) {
    auto a = m5_init(tiny_config(), 1);
    auto b = a;
    a.parameters[0] = 0.0f;
    b.parameters[0] = -0.0f;
    EXPECT_FALSE(a.bitwise_equal(b));
}
