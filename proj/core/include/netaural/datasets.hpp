// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "netaural/edge_list.hpp"

namespace netaural {

struct DatasetInfo {
    std::string name;
    std::size_t n = 0;
    std::size_t m = 0;
    std::string source;
};

/// Bundled real-world networks: karate, florentine, davis, lesmis.
const std::vector<DatasetInfo>& dataset_manifest();
std::vector<std::string> dataset_names();

/// Throws std::invalid_argument for an unknown name.
LabeledGraph bundled_graph(std::string_view name);

} // namespace netaural
