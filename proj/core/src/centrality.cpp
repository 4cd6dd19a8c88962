// SPDX-License-Identifier: Apache-2.0
#include "netaural/centrality.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <queue>
#include <stack>

namespace netaural {

std::string_view measure_name(Measure m) {
    switch (m) {
    case Measure::Degree: return "degree";
    case Measure::Closeness: return "closeness";
    case Measure::Betweenness: return "betweenness";
    case Measure::Eigenvector: return "eigenvector";
    case Measure::Predicted: return "predicted";
    }
    return "unknown";
}

std::string_view measure_short_name(Measure m) {
    switch (m) {
    case Measure::Degree: return "Deg";
    case Measure::Closeness: return "CC";
    case Measure::Betweenness: return "BC";
    case Measure::Eigenvector: return "EC";
    case Measure::Predicted: return "Pred";
    }
    return "?";
}

std::optional<Measure> parse_measure(std::string_view name) {
    for (auto m : target_measures()) {
        if (measure_name(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

const std::vector<Measure>& target_measures() {
    static const std::vector<Measure> measures = {Measure::Degree, Measure::Closeness,
                                                  Measure::Eigenvector, Measure::Betweenness};
    return measures;
}

CentralityVector degree_centrality(const Graph& g) {
    CentralityVector c{Measure::Degree, std::vector<double>(g.num_nodes())};
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        c.values[v] = static_cast<double>(g.degree(v));
    }
    return c;
}

namespace {

constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);

/// BFS distances from s; unreachable nodes get kUnreached.
std::vector<std::size_t> bfs_distances(const Graph& g, NodeId s) {
    std::vector<std::size_t> dist(g.num_nodes(), kUnreached);
    std::queue<NodeId> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
        const NodeId u = q.front();
        q.pop();
        for (NodeId w : g.neighbors(u)) {
            if (dist[w] == kUnreached) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

} // namespace

CentralityVector closeness_centrality(const Graph& g) {
    const std::size_t n = g.num_nodes();
    CentralityVector c{Measure::Closeness, std::vector<double>(n, 0.0)};
    for (NodeId v = 0; v < n; ++v) {
        const auto dist = bfs_distances(g, v);
        std::size_t reached = 0;
        std::size_t total = 0;
        for (auto d : dist) {
            if (d != kUnreached) {
                ++reached;
                total += d;
            }
        }
        if (reached > 1 && total > 0) {
            const double r1 = static_cast<double>(reached - 1);
            c.values[v] = (r1 / static_cast<double>(total)) * (r1 / static_cast<double>(n - 1));
        }
    }
    return c;
}

CentralityVector betweenness_centrality(const Graph& g) {
    const std::size_t n = g.num_nodes();
    CentralityVector c{Measure::Betweenness, std::vector<double>(n, 0.0)};
    if (n < 3) {
        return c;
    }
    std::vector<std::size_t> dist(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<NodeId> order;
    order.reserve(n);
    std::queue<NodeId> q;
    for (NodeId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kUnreached);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        order.clear();
        dist[s] = 0;
        sigma[s] = 1.0;
        q.push(s);
        while (!q.empty()) {
            const NodeId v = q.front();
            q.pop();
            order.push_back(v);
            for (NodeId w : g.neighbors(v)) {
                if (dist[w] == kUnreached) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                }
            }
        }
        // Dependency accumulation in reverse BFS order; predecessors are the
        // neighbors one level closer to s.
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const NodeId w = *it;
            for (NodeId v : g.neighbors(w)) {
                if (dist[v] != kUnreached && dist[v] + 1 == dist[w]) {
                    delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
                }
            }
            if (w != s) {
                c.values[w] += delta[w];
            }
        }
    }
    // Each unordered pair was counted from both endpoints.
    const double scale = 1.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
    for (auto& x : c.values) {
        x *= scale;
    }
    return c;
}

CentralityVector eigenvector_centrality(const Graph& g, double tol, std::size_t max_iter) {
    const std::size_t n = g.num_nodes();
    if (g.num_edges() == 0) {
        throw ConvergenceError("eigenvector centrality is undefined on a graph without edges");
    }
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> next(n);
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        double norm = 0.0;
        for (NodeId v = 0; v < n; ++v) {
            double acc = x[v];
            for (NodeId u : g.neighbors(v)) {
                acc += x[u];
            }
            next[v] = acc;
            norm += acc * acc;
        }
        norm = std::sqrt(norm);
        double diff = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            next[v] /= norm;
            diff += (next[v] - x[v]) * (next[v] - x[v]);
        }
        x.swap(next);
        if (std::sqrt(diff) < tol) {
            return {Measure::Eigenvector, std::move(x)};
        }
    }
    throw ConvergenceError("eigenvector centrality did not converge in " +
                           std::to_string(max_iter) + " iterations");
}

CentralityVector naive_betweenness_oracle(const Graph& g) {
    const std::size_t n = g.num_nodes();
    if (n > 12) {
        throw std::invalid_argument("naive_betweenness_oracle: limited to 12 nodes");
    }
    CentralityVector c{Measure::Betweenness, std::vector<double>(n, 0.0)};
    if (n < 3) {
        return c;
    }
    std::vector<std::vector<std::size_t>> dist(n);
    for (NodeId v = 0; v < n; ++v) {
        dist[v] = bfs_distances(g, v);
    }
    std::vector<NodeId> path;
    std::vector<double> through(n);
    for (NodeId s = 0; s < n; ++s) {
        for (NodeId t = s + 1; t < n; ++t) {
            if (dist[s][t] == kUnreached) {
                continue;
            }
            // Depth-first walk over every shortest s-t path.
            std::uint64_t paths = 0;
            std::fill(through.begin(), through.end(), 0.0);
            path.assign(1, s);
            auto walk = [&](auto&& self, NodeId u) -> void {
                if (u == t) {
                    ++paths;
                    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                        through[path[i]] += 1.0;
                    }
                    return;
                }
                for (NodeId w : g.neighbors(u)) {
                    if (dist[w][t] + 1 == dist[u][t]) {
                        path.push_back(w);
                        self(self, w);
                        path.pop_back();
                    }
                }
            };
            walk(walk, s);
            for (NodeId v = 0; v < n; ++v) {
                c.values[v] += through[v] / static_cast<double>(paths);
            }
        }
    }
    const double pairs = static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0;
    for (auto& x : c.values) {
        x /= pairs;
    }
    return c;
}

CentralityVector compute_centrality(const Graph& g, Measure m) {
    switch (m) {
    case Measure::Degree: return degree_centrality(g);
    case Measure::Closeness: return closeness_centrality(g);
    case Measure::Betweenness: return betweenness_centrality(g);
    case Measure::Eigenvector: return eigenvector_centrality(g);
    case Measure::Predicted: break;
    }
    throw std::invalid_argument("no ground-truth routine for measure 'predicted'");
}

std::string centrality_csv(const CentralityVector& c, const std::vector<std::string>& labels) {
    std::string out = "node_id,label,measure,value\n";
    char buf[32];
    for (std::size_t v = 0; v < c.values.size(); ++v) {
        out += std::to_string(v);
        out += ',';
        if (v < labels.size()) out += labels[v];
        out += ',';
        out += measure_name(c.measure);
        out += ',';
        const auto res = std::to_chars(buf, buf + sizeof(buf), c.values[v]);
        out.append(buf, res.ptr);
        out += '\n';
    }
    return out;
}

} // namespace netaural
