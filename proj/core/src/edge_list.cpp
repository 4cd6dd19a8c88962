// SPDX-License-Identifier: Apache-2.0
#include "netaural/edge_list.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace netaural {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        const std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (i > start) {
            tokens.push_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

} // namespace

LabeledGraph load_edge_list(std::string_view text) {
    std::unordered_map<std::string, NodeId> ids;
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    const auto intern = [&](std::string_view token) {
        auto [it, inserted] = ids.try_emplace(std::string(token), static_cast<NodeId>(labels.size()));
        if (inserted) {
            labels.emplace_back(token);
        }
        return it->second;
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        const auto tokens = tokenize(line);
        if (tokens.empty() || tokens.front().front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        if (tokens.size() != 2) {
            throw EdgeListError(line_no, "expected two node labels, found " +
                                             std::to_string(tokens.size()) + " tokens");
        }
        if (tokens[0] == tokens[1]) {
            throw EdgeListError(line_no, "self-loop on node '" + std::string(tokens[0]) + "'");
        }
        const NodeId u = intern(tokens[0]);
        const NodeId v = intern(tokens[1]);
        edges.emplace_back(u, v);
        if (end == text.size()) break;
    }
    return {Graph(labels.size(), edges), std::move(labels)};
}

LabeledGraph load_edge_list_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open edge list " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_edge_list(buf.str());
}

std::string write_edge_list(const Graph& g, const std::vector<std::string>& labels) {
    if (!labels.empty() && labels.size() != g.num_nodes()) {
        throw std::invalid_argument("label count does not match node count");
    }
    std::ostringstream out;
    for (auto [u, v] : g.edges()) {
        if (labels.empty()) {
            out << u << ' ' << v << '\n';
        } else {
            out << labels[u] << ' ' << labels[v] << '\n';
        }
    }
    return out.str();
}

} // namespace netaural
