// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace netaural::cli {

std::string sha256_hex(const std::filesystem::path& path);
std::string utc_timestamp();

/// One per invocation; records what was asked for and what was written.
class RunManifest {
public:
    RunManifest(std::string subcommand, std::uint64_t seed);

    void set_config(nlohmann::json config) { config_ = std::move(config); }
    void add_input(const std::filesystem::path& path);
    void add_output(const std::filesystem::path& path);
    void add_note(std::string note) { notes_.push_back(std::move(note)); }

    /// Checksums outputs as they are on disk now.
    void write(const std::filesystem::path& path) const;

private:
    std::string subcommand_;
    std::uint64_t seed_;
    std::string started_;
    nlohmann::json config_ = nlohmann::json::object();
    std::vector<std::filesystem::path> inputs_;
    std::vector<std::filesystem::path> outputs_;
    std::vector<std::string> notes_;
};

} // namespace netaural::cli
