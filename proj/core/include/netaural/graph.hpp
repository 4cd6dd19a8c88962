// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace netaural {

using NodeId = std::uint32_t;

/// Unordered edge stored with first < second.
using Edge = std::pair<NodeId, NodeId>;

/**
 * Simple undirected unweighted graph in compressed sparse row form.
 *
 * Immutable once built: neighbor lists are sorted ascending, there are no
 * self-loops or duplicate edges, and adjacency is symmetric. Safe to share
 * across threads.
 */
class Graph {
public:
    Graph() = default;

    /// Builds a graph on n nodes. Duplicate pairs (in either orientation) are
    /// collapsed; self-loops and out-of-range endpoints throw
    /// std::invalid_argument.
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t num_nodes() const { return offsets_.size() - 1; }
    std::size_t num_edges() const { return targets_.size() / 2; }

    std::span<const NodeId> neighbors(NodeId v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
    std::vector<std::size_t> degrees() const;
    bool has_edge(NodeId u, NodeId v) const;

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    /// CSR arrays: the neighbors of v occupy targets()[offsets()[v] .. offsets()[v+1]).
    std::span<const std::size_t> offsets() const { return offsets_; }
    std::span<const NodeId> targets() const { return targets_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> targets_;
};

/// Mutable adjacency used by the generators before freezing into a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n) : adjacency_(n) {}

    std::size_t num_nodes() const { return adjacency_.size(); }
    /// Returns false when the edge already exists. Throws on self-loops.
    bool add_edge(NodeId u, NodeId v);
    bool remove_edge(NodeId u, NodeId v);
    bool has_edge(NodeId u, NodeId v) const;
    std::size_t degree(NodeId v) const { return adjacency_[v].size(); }

    Graph build() const;

private:
    std::vector<std::set<NodeId>> adjacency_;
};

/// Component id per node; components are numbered by their smallest node id.
std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count = nullptr);
bool is_connected(const Graph& g);

/// Subgraph induced by the largest connected component, relabeled densely in
/// ascending original-id order. Ties go to the component holding the
/// smallest node id. If `kept` is given it receives the original id of every
/// new node.
Graph giant_component(const Graph& g, std::vector<NodeId>* kept = nullptr);

/// Relabels node v as perm[v]. Throws std::invalid_argument unless perm is a
/// bijection on 0..n-1.
Graph permute(const Graph& g, std::span<const NodeId> perm);

} // namespace netaural
