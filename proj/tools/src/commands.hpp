// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

#include <CLI11.hpp>

namespace netaural::cli {

/// Bad flag values detected after parsing; exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Registers gen, auralize, centrality, train, eval and reproduce.
void add_commands(CLI::App& app);

} // namespace netaural::cli
