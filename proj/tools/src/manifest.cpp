// SPDX-License-Identifier: Apache-2.0
#include "manifest.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <memory>
#include <stdexcept>

#include <openssl/evp.h>

namespace netaural::cli {

std::string sha256_hex(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 unavailable");
    }
    char buf[1 << 16];
    while (in) {
        in.read(buf, sizeof(buf));
        EVP_DigestUpdate(ctx.get(), buf, static_cast<std::size_t>(in.gcount()));
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx.get(), digest, &len);
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += kHex[digest[i] >> 4];
        out += kHex[digest[i] & 0xf];
    }
    return out;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

RunManifest::RunManifest(std::string subcommand, std::uint64_t seed)
    : subcommand_(std::move(subcommand)), seed_(seed), started_(utc_timestamp()) {}

void RunManifest::add_input(const std::filesystem::path& path) { inputs_.push_back(path); }
void RunManifest::add_output(const std::filesystem::path& path) { outputs_.push_back(path); }

void RunManifest::write(const std::filesystem::path& path) const {
    const auto files = [](const std::vector<std::filesystem::path>& paths) {
        auto arr = nlohmann::json::array();
        for (const auto& p : paths) {
            arr.push_back({{"path", p.string()},
                           {"bytes", std::filesystem::file_size(p)},
                           {"sha256", sha256_hex(p)}});
        }
        return arr;
    };
    const nlohmann::json j{{"subcommand", subcommand_},
                           {"tool_version", NETAURAL_VERSION_STRING},
                           {"seed", seed_},
                           {"config", config_},
                           {"inputs", files(inputs_)},
                           {"outputs", files(outputs_)},
                           {"notes", notes_},
                           {"started_at", started_},
                           {"finished_at", utc_timestamp()}};
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("cannot write manifest " + path.string());
}

} // namespace netaural::cli
