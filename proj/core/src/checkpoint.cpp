// SPDX-License-Identifier: Apache-2.0
#include "netaural/checkpoint.hpp"

#include <cstring>
#include <filesystem>
#include <map>
#include <memory>

namespace netaural {

namespace {

bool same_bits(const std::vector<float>& a, const std::vector<float>& b) {
    return a.size() == b.size() &&
           (a.empty() || std::memcmp(a.data(), b.data(), a.size() * sizeof(float)) == 0);
}

std::string shape_string(const std::vector<std::size_t>& shape) {
    std::string s = "(";
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(shape[i]);
    }
    return s + ")";
}

void put_tensor(std::vector<std::uint8_t>& out, const std::string& name,
                const std::vector<std::size_t>& shape, std::span<const float> values) {
    detail::put_le<std::uint16_t>(out, static_cast<std::uint16_t>(name.size()));
    out.insert(out.end(), name.begin(), name.end());
    detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(shape.size()));
    for (auto d : shape) {
        detail::put_le<std::uint64_t>(out, d);
    }
    for (float x : values) {
        detail::put_le(out, x);
    }
}

} // namespace

bool ModelCheckpoint::bitwise_equal(const ModelCheckpoint& other) const {
    return config == other.config && metadata == other.metadata &&
           same_bits(parameters, other.parameters) && same_bits(buffers, other.buffers) &&
           same_bits(adam_first_moment, other.adam_first_moment) &&
           same_bits(adam_second_moment, other.adam_second_moment);
}

ModelCheckpoint m5_init(const M5Config& config, std::uint64_t seed) {
    auto net = M5Network<float>::initialized(config, seed);
    ModelCheckpoint ckpt;
    ckpt.config = config;
    ckpt.parameters = net.parameters();
    ckpt.buffers = net.buffers();
    ckpt.metadata.seed = seed;
    return ckpt;
}

CentralityVector m5_forward(const ModelCheckpoint& ckpt, const WaveformMatrix& w) {
    if (w.samples() != ckpt.config.input_length) {
        throw std::invalid_argument("waveform length " + std::to_string(w.samples()) +
                                    " does not match model input length " +
                                    std::to_string(ckpt.config.input_length));
    }
    const auto inputs = prepare_inputs<float>(w, ckpt.config.standardize_input);
    const auto out = ckpt.network().forward(inputs, w.nodes());
    return {Measure::Predicted, std::vector<double>(out.begin(), out.end())};
}

std::vector<std::uint8_t> save_checkpoint(const ModelCheckpoint& ckpt) {
    const M5Layout layout(ckpt.config);
    if (ckpt.parameters.size() != layout.parameter_count() ||
        ckpt.buffers.size() != layout.buffer_count()) {
        throw std::invalid_argument("checkpoint tensors do not match its configuration");
    }
    const bool with_adam = !ckpt.adam_first_moment.empty();
    if (with_adam && (ckpt.adam_first_moment.size() != ckpt.parameters.size() ||
                      ckpt.adam_second_moment.size() != ckpt.parameters.size())) {
        throw std::invalid_argument("optimizer state does not match parameter count");
    }

    nlohmann::json header;
    header["config"] = ckpt.config;
    header["metadata"] = {{"measure", ckpt.metadata.measure},
                          {"seed", ckpt.metadata.seed},
                          {"epochs_completed", ckpt.metadata.epochs_completed},
                          {"optimizer_steps", ckpt.metadata.optimizer_steps},
                          {"train_config", ckpt.metadata.train_config}};
    const std::string header_text = header.dump();

    std::vector<std::uint8_t> out;
    out.insert(out.end(), {'M', '5', 'C', 'K'});
    detail::put_le<std::uint32_t>(out, kCheckpointFormatVersion);
    detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(header_text.size()));
    out.insert(out.end(), header_text.begin(), header_text.end());

    const std::size_t count =
        layout.parameters().size() * (with_adam ? 3 : 1) + layout.buffers().size();
    detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(count));
    const auto slice = [](const std::vector<float>& v, const TensorSpec& t) {
        return std::span<const float>(v).subspan(t.offset, t.size);
    };
    for (const auto& t : layout.parameters()) put_tensor(out, t.name, t.shape, slice(ckpt.parameters, t));
    for (const auto& t : layout.buffers()) put_tensor(out, t.name, t.shape, slice(ckpt.buffers, t));
    if (with_adam) {
        for (const auto& t : layout.parameters())
            put_tensor(out, "adam.m." + t.name, t.shape, slice(ckpt.adam_first_moment, t));
        for (const auto& t : layout.parameters())
            put_tensor(out, "adam.v." + t.name, t.shape, slice(ckpt.adam_second_moment, t));
    }
    return out;
}

ModelCheckpoint load_checkpoint(std::span<const std::uint8_t> bytes, const M5Config* expected) {
    detail::ByteReader in(bytes);
    if (in.get_string(4) != "M5CK") {
        throw FormatError("not a checkpoint file (bad magic)");
    }
    const auto version = in.get<std::uint32_t>();
    if (version != kCheckpointFormatVersion) {
        throw FormatError("unsupported checkpoint version " + std::to_string(version));
    }
    const auto header_len = in.get<std::uint32_t>();
    nlohmann::json header;
    try {
        header = nlohmann::json::parse(in.get_string(header_len));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("corrupt checkpoint header: ") + e.what());
    }

    ModelCheckpoint ckpt;
    try {
        ckpt.config = header.at("config").get<M5Config>();
        const auto& meta = header.at("metadata");
        ckpt.metadata.measure = meta.at("measure").get<std::string>();
        ckpt.metadata.seed = meta.at("seed").get<std::uint64_t>();
        ckpt.metadata.epochs_completed = meta.at("epochs_completed").get<std::size_t>();
        ckpt.metadata.optimizer_steps = meta.at("optimizer_steps").get<std::size_t>();
        ckpt.metadata.train_config = meta.at("train_config");
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("incomplete checkpoint header: ") + e.what());
    }
    const M5Config& target = expected ? *expected : ckpt.config;
    std::unique_ptr<M5Layout> layout;
    try {
        layout = std::make_unique<M5Layout>(target);
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("invalid model configuration: ") + e.what());
    }

    std::map<std::string, std::pair<const TensorSpec*, std::vector<float>*>> slots;
    ckpt.parameters.assign(layout->parameter_count(), 0.0f);
    ckpt.buffers.assign(layout->buffer_count(), 0.0f);
    for (const auto& t : layout->parameters()) slots[t.name] = {&t, &ckpt.parameters};
    for (const auto& t : layout->buffers()) slots[t.name] = {&t, &ckpt.buffers};

    const auto count = in.get<std::uint32_t>();
    std::size_t seen = 0;
    bool adam_seen = false;
    for (std::uint32_t i = 0; i < count; ++i) {
        const auto name = in.get_string(in.get<std::uint16_t>());
        const auto rank = in.get<std::uint32_t>();
        if (rank > 8) {
            throw FormatError("tensor '" + name + "' has implausible rank");
        }
        std::vector<std::size_t> shape(rank);
        std::size_t size = 1;
        for (auto& d : shape) {
            d = in.get<std::uint64_t>();
            size *= d;
        }
        std::string base = name;
        std::vector<float>* adam_target = nullptr;
        for (const char* prefix : {"adam.m.", "adam.v."}) {
            if (name.rfind(prefix, 0) == 0) {
                base = name.substr(std::strlen(prefix));
                if (!adam_seen) {
                    ckpt.adam_first_moment.assign(layout->parameter_count(), 0.0f);
                    ckpt.adam_second_moment.assign(layout->parameter_count(), 0.0f);
                    adam_seen = true;
                }
                adam_target = prefix[5] == 'm' ? &ckpt.adam_first_moment : &ckpt.adam_second_moment;
            }
        }
        const auto it = slots.find(base);
        if (it == slots.end()) {
            throw ShapeError("tensor '" + name + "' is not part of the model configuration");
        }
        const TensorSpec& spec = *it->second.first;
        if (shape != spec.shape) {
            throw ShapeError("tensor '" + name + "' has shape " + shape_string(shape) +
                             ", configuration expects " + shape_string(spec.shape));
        }
        std::vector<float>& dest = adam_target ? *adam_target : *it->second.second;
        if (in.remaining() / sizeof(float) < size) {
            throw FormatError("truncated payload for tensor '" + name + "'");
        }
        for (std::size_t k = 0; k < size; ++k) {
            dest[spec.offset + k] = in.get<float>();
        }
        if (!adam_target) ++seen;
    }
    if (seen != slots.size()) {
        throw FormatError("checkpoint is missing tensors");
    }
    if (in.remaining() != 0) {
        throw FormatError("trailing bytes after checkpoint tensors");
    }
    if (expected && !(ckpt.config == *expected)) {
        throw FormatError("checkpoint configuration differs from the expected one");
    }
    return ckpt;
}

void save_checkpoint_file(const ModelCheckpoint& ckpt, const std::string& path) {
    // Write-then-rename so an interrupted save never leaves a torn file.
    const std::string tmp = path + ".tmp";
    write_file_bytes(tmp, save_checkpoint(ckpt));
    std::filesystem::rename(tmp, path);
}

ModelCheckpoint load_checkpoint_file(const std::string& path, const M5Config* expected) {
    return load_checkpoint(read_file_bytes(path), expected);
}

} // namespace netaural
