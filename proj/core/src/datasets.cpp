// SPDX-License-Identifier: Apache-2.0
#include "netaural/datasets.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace netaural {

namespace detail {
extern const std::pair<std::string_view, std::string_view> kDatasetAssets[];
extern const std::size_t kDatasetAssetCount;
extern const std::string_view kDatasetManifest;
} // namespace detail

const std::vector<DatasetInfo>& dataset_manifest() {
    static const std::vector<DatasetInfo> manifest = [] {
        std::vector<DatasetInfo> out;
        for (const auto& entry : nlohmann::json::parse(detail::kDatasetManifest)) {
            out.push_back({entry.at("name").get<std::string>(), entry.at("n").get<std::size_t>(),
                           entry.at("m").get<std::size_t>(), entry.at("source").get<std::string>()});
        }
        return out;
    }();
    return manifest;
}

std::vector<std::string> dataset_names() {
    std::vector<std::string> names;
    for (const auto& info : dataset_manifest()) {
        names.push_back(info.name);
    }
    return names;
}

LabeledGraph bundled_graph(std::string_view name) {
    for (std::size_t i = 0; i < detail::kDatasetAssetCount; ++i) {
        if (detail::kDatasetAssets[i].first == name) {
            return load_edge_list(detail::kDatasetAssets[i].second);
        }
    }
    throw std::invalid_argument("unknown dataset '" + std::string(name) + "'");
}

} // namespace netaural
