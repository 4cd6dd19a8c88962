// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "netaural/graph.hpp"

namespace netaural {

/// A graph together with the external label of every dense node id.
struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels;
};

/// Malformed edge-list input; line() is 1-based.
class EdgeListError : public std::runtime_error {
public:
    EdgeListError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Parses "u v" pairs, one per line. Labels are arbitrary whitespace-free
/// tokens mapped to ids 0..n-1 in order of first appearance. Lines whose
/// first non-blank character is '#' and blank lines are skipped, CRLF is
/// accepted, duplicate edges collapse. Self-loops and lines without exactly
/// two tokens throw EdgeListError.
LabeledGraph load_edge_list(std::string_view text);
LabeledGraph load_edge_list_file(const std::filesystem::path& path);

/// One "u v" line per edge (u < v), using labels when given (one per node)
/// and dense ids otherwise. Isolated nodes are not representable.
std::string write_edge_list(const Graph& g, const std::vector<std::string>& labels = {});

} // namespace netaural
