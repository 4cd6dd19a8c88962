// SPDX-License-Identifier: Apache-2.0
#include "netaural/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace netaural {

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
    std::vector<Edge> directed;
    directed.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                        ") out of range for " + std::to_string(n) + " nodes");
        }
        if (u == v) {
            throw std::invalid_argument("self-loop on node " + std::to_string(u));
        }
        directed.emplace_back(u, v);
        directed.emplace_back(v, u);
    }
    std::sort(directed.begin(), directed.end());
    directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

    offsets_.assign(n + 1, 0);
    targets_.reserve(directed.size());
    for (auto [u, v] : directed) {
        ++offsets_[u + 1];
        targets_.push_back(v);
    }
    for (std::size_t v = 0; v < n; ++v) {
        offsets_[v + 1] += offsets_[v];
    }
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> d(num_nodes());
    for (std::size_t v = 0; v < d.size(); ++v) {
        d[v] = degree(static_cast<NodeId>(v));
    }
    return d;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (u >= num_nodes() || v >= num_nodes()) {
        return false;
    }
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges());
    for (NodeId u = 0; u < num_nodes(); ++u) {
        for (NodeId v : neighbors(u)) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

bool GraphBuilder::add_edge(NodeId u, NodeId v) {
    if (u == v) {
        throw std::invalid_argument("self-loop on node " + std::to_string(u));
    }
    if (!adjacency_.at(u).insert(v).second) {
        return false;
    }
    adjacency_.at(v).insert(u);
    return true;
}

bool GraphBuilder::remove_edge(NodeId u, NodeId v) {
    if (adjacency_.at(u).erase(v) == 0) {
        return false;
    }
    adjacency_.at(v).erase(u);
    return true;
}

bool GraphBuilder::has_edge(NodeId u, NodeId v) const {
    return adjacency_.at(u).count(v) != 0;
}

Graph GraphBuilder::build() const {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < adjacency_.size(); ++u) {
        for (NodeId v : adjacency_[u]) {
            if (u < v) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(adjacency_.size(), edges);
}

std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count) {
    const std::size_t n = g.num_nodes();
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> comp(n, unset);
    std::size_t next = 0;
    std::queue<NodeId> frontier;
    for (NodeId s = 0; s < n; ++s) {
        if (comp[s] != unset) {
            continue;
        }
        comp[s] = next;
        frontier.push(s);
        while (!frontier.empty()) {
            const NodeId u = frontier.front();
            frontier.pop();
            for (NodeId v : g.neighbors(u)) {
                if (comp[v] == unset) {
                    comp[v] = next;
                    frontier.push(v);
                }
            }
        }
        ++next;
    }
    if (count) {
        *count = next;
    }
    return comp;
}

bool is_connected(const Graph& g) {
    std::size_t count = 0;
    connected_components(g, &count);
    return count <= 1;
}

Graph giant_component(const Graph& g, std::vector<NodeId>* kept) {
    std::size_t count = 0;
    const auto comp = connected_components(g, &count);
    std::vector<std::size_t> sizes(count, 0);
    for (auto c : comp) {
        ++sizes[c];
    }
    // Components are numbered in order of their smallest member, so the first
    // maximum is the tie-break winner.
    const auto best = static_cast<std::size_t>(
        std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

    std::vector<NodeId> relabel(g.num_nodes(), 0);
    std::vector<NodeId> members;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        if (comp[v] == best) {
            relabel[v] = static_cast<NodeId>(members.size());
            members.push_back(v);
        }
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        if (comp[u] == best) {
            edges.emplace_back(relabel[u], relabel[v]);
        }
    }
    if (kept) {
        *kept = members;
    }
    return Graph(members.size(), edges);
}

Graph permute(const Graph& g, std::span<const NodeId> perm) {
    const std::size_t n = g.num_nodes();
    if (perm.size() != n) {
        throw std::invalid_argument("permutation length does not match node count");
    }
    std::vector<bool> seen(n, false);
    for (NodeId p : perm) {
        if (p >= n || seen[p]) {
            throw std::invalid_argument("permutation is not a bijection");
        }
        seen[p] = true;
    }
    std::vector<Edge> edges;
    edges.reserve(g.num_edges());
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(perm[u], perm[v]);
    }
    return Graph(n, edges);
}

} // namespace netaural
