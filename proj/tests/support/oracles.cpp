// SPDX-License-Identifier: Apache-2.0
#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oracle {

using netaural::Edge;
using netaural::Graph;
using netaural::NodeId;

std::vector<std::vector<int>> adjacency(const Graph& g) {
    const std::size_t n = g.num_nodes();
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (auto [u, v] : g.edges()) {
        a[u][v] = 1;
        a[v][u] = 1;
    }
    return a;
}

std::vector<std::vector<int>> distances(const Graph& g) {
    const std::size_t n = g.num_nodes();
    const auto a = adjacency(g);
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kUnreachable));
    for (std::size_t i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (a[i][j]) d[i][j] = 1;
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
            }
        }
    }
    return d;
}

std::vector<std::vector<double>> path_counts(const Graph& g, const std::vector<std::vector<int>>& dist) {
    const std::size_t n = g.num_nodes();
    const auto a = adjacency(g);
    std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0.0));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t x, std::size_t y) { return dist[s][x] < dist[s][y]; });
        sigma[s][s] = 1.0;
        for (std::size_t t : order) {
            if (t == s || dist[s][t] >= kUnreachable) continue;
            for (std::size_t w = 0; w < n; ++w) {
                if (a[t][w] && dist[s][w] == dist[s][t] - 1) sigma[s][t] += sigma[s][w];
            }
        }
    }
    return sigma;
}

std::vector<double> betweenness(const Graph& g) {
    const std::size_t n = g.num_nodes();
    std::vector<double> b(n, 0.0);
    if (n < 3) return b;
    const auto d = distances(g);
    const auto sigma = path_counts(g, d);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = s + 1; t < n; ++t) {
            if (d[s][t] >= kUnreachable) continue;
            for (std::size_t v = 0; v < n; ++v) {
                if (v == s || v == t) continue;
                if (d[s][v] + d[v][t] == d[s][t]) b[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
            }
        }
    }
    const double norm = static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0;
    for (auto& x : b) x /= norm;
    return b;
}

std::vector<double> closeness(const Graph& g) {
    const std::size_t n = g.num_nodes();
    const auto d = distances(g);
    std::vector<double> c(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
        double total = 0.0;
        double reach = 0.0;
        for (std::size_t u = 0; u < n; ++u) {
            if (u != v && d[v][u] < kUnreachable) {
                total += d[v][u];
                reach += 1.0;
            }
        }
        if (reach > 0.0) c[v] = (reach / total) * (reach / static_cast<double>(n - 1));
    }
    return c;
}

Matrix transition(const Graph& g) {
    const std::size_t n = g.num_nodes();
    const auto a = adjacency(g);
    Matrix p(n, std::vector<double>(n, 0.0));
    for (std::size_t u = 0; u < n; ++u) {
        const int deg = std::accumulate(a[u].begin(), a[u].end(), 0);
        if (deg == 0) continue;
        for (std::size_t v = 0; v < n; ++v) p[u][v] = a[u][v] / static_cast<double>(deg);
    }
    return p;
}

std::vector<double> transpose_times(const Matrix& p, const std::vector<double>& s) {
    const std::size_t n = s.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u = 0; u < n; ++u) out[v] += p[u][v] * s[u];
    }
    return out;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    long double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    long double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return static_cast<double>(sxy / std::sqrt(sxx * syy));
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (coin(rng)) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

Graph random_graph_no_isolated(std::size_t n, double p, std::mt19937_64& rng) {
    for (;;) {
        Graph g = random_graph(n, p, rng);
        bool ok = true;
        for (NodeId v = 0; v < n; ++v) ok = ok && g.degree(v) > 0;
        if (ok) return g;
    }
}

std::vector<NodeId> random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> e;
    for (NodeId v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, e);
}

Graph cycle_graph(std::size_t n) {
    std::vector<Edge> e;
    for (NodeId v = 0; v < n; ++v) e.emplace_back(v, static_cast<NodeId>((v + 1) % n));
    return Graph(n, e);
}

Graph star_graph(std::size_t n) {
    std::vector<Edge> e;
    for (NodeId v = 1; v < n; ++v) e.emplace_back(0, v);
    return Graph(n, e);
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> e;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) e.emplace_back(u, v);
    }
    return Graph(n, e);
}

} // namespace oracle
