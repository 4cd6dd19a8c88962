// SPDX-License-Identifier: Apache-2.0
#include "netaural/auralize.hpp"

#include <algorithm>
#include <stdexcept>

namespace netaural {

FlowState power_matrix(const Graph& g, double momentum, double eps) {
    FlowState st;
    st.offsets.assign(g.offsets().begin(), g.offsets().end());
    st.targets.assign(g.targets().begin(), g.targets().end());
    st.momentum = momentum;
    st.power.resize(st.targets.size());
    st.flow.assign(st.targets.size(), 0.0);
    st.reverse.resize(st.targets.size());

    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        const double denom = static_cast<double>(g.degree(u)) + eps;
        for (std::size_t i = st.offsets[u]; i < st.offsets[u + 1]; ++i) {
            st.power[i] = 1.0 / denom;
            const NodeId v = st.targets[i];
            const auto row = g.neighbors(v);
            const auto pos = std::lower_bound(row.begin(), row.end(), u) - row.begin();
            st.reverse[i] = st.offsets[v] + static_cast<std::size_t>(pos);
        }
    }
    return st;
}

void flow_step(FlowState& st, std::span<const double> s_prev, std::span<double> s_next) {
    const std::size_t n = st.num_nodes();
    if (s_prev.size() != n || s_next.size() != n) {
        throw std::invalid_argument("flow_step: potential vector size does not match node count");
    }
    const double m = st.momentum;
    for (std::size_t u = 0; u < n; ++u) {
        const double s = s_prev[u];
        for (std::size_t i = st.offsets[u]; i < st.offsets[u + 1]; ++i) {
            st.flow[i] = s * st.power[i] + m * st.flow[i];
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        double incoming = 0.0;
        double outgoing = 0.0;
        for (std::size_t i = st.offsets[v]; i < st.offsets[v + 1]; ++i) {
            incoming += st.flow[st.reverse[i]];
            outgoing += st.flow[i];
        }
        s_next[v] = s_prev[v] + (incoming - outgoing);
    }
}

std::vector<double> WaveformMatrix::column(std::size_t v) const {
    std::vector<double> out(samples_);
    for (std::size_t t = 0; t < samples_; ++t) {
        out[t] = at(t, v);
    }
    return out;
}

namespace {

void check_arguments(double momentum, std::size_t samples) {
    if (samples == 0) {
        throw std::invalid_argument("auralize: sample count must be at least 1");
    }
    if (!(momentum >= 0.0 && momentum <= 1.0)) {
        throw std::invalid_argument("auralize: momentum must lie in [0, 1]");
    }
}

} // namespace

WaveformMatrix auralize_raw(const Graph& g, double momentum, std::size_t samples) {
    check_arguments(momentum, samples);
    const std::size_t n = g.num_nodes();
    FlowState st = power_matrix(g, momentum);
    WaveformMatrix out(samples, n);
    std::vector<double> impulse(n, 1.0);
    std::span<const double> prev = impulse;
    for (std::size_t t = 0; t < samples; ++t) {
        flow_step(st, prev, out.row(t));
        prev = out.row(t);
    }
    return out;
}

void remove_dc(WaveformMatrix& w) {
    const std::size_t l = w.samples();
    const std::size_t n = w.nodes();
    if (l == 0) {
        return;
    }
    std::vector<double> mean(n, 0.0);
    for (std::size_t t = 0; t < l; ++t) {
        const auto r = w.row(t);
        for (std::size_t v = 0; v < n; ++v) {
            mean[v] += r[v];
        }
    }
    for (auto& x : mean) {
        x /= static_cast<double>(l);
    }
    for (std::size_t t = 0; t < l; ++t) {
        auto r = w.row(t);
        for (std::size_t v = 0; v < n; ++v) {
            r[v] -= mean[v];
        }
    }
}

WaveformMatrix auralize(const Graph& g, double momentum, std::size_t samples) {
    WaveformMatrix w = auralize_raw(g, momentum, samples);
    remove_dc(w);
    return w;
}

WaveformMatrix auralize_dense_oracle(const Graph& g, double momentum, std::size_t samples,
                                     bool dc_removal) {
    check_arguments(momentum, samples);
    const std::size_t n = g.num_nodes();
    if (n > 64) {
        throw std::invalid_argument("auralize_dense_oracle: limited to 64 nodes");
    }
    // P = A / (A.sum(0) + eps).T
    std::vector<double> A(n * n, 0.0);
    for (auto [u, v] : g.edges()) {
        A[u * n + v] = 1.0;
        A[v * n + u] = 1.0;
    }
    std::vector<double> P(n * n, 0.0);
    for (std::size_t u = 0; u < n; ++u) {
        double d = 0.0;
        for (std::size_t v = 0; v < n; ++v) d += A[v * n + u];
        for (std::size_t v = 0; v < n; ++v) P[u * n + v] = A[u * n + v] / (d + kPowerEpsilon);
    }

    std::vector<double> S(n, 1.0);
    std::vector<double> dS(n * n, 0.0);
    std::vector<double> next(n);
    WaveformMatrix out(samples, n);
    for (std::size_t t = 0; t < samples; ++t) {
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = 0; v < n; ++v) {
                dS[u * n + v] = S[u] * P[u * n + v] + momentum * dS[u * n + v];
            }
        }
        for (std::size_t v = 0; v < n; ++v) {
            double in = 0.0, out_flow = 0.0;
            for (std::size_t u = 0; u < n; ++u) in += dS[u * n + v];
            for (std::size_t u = 0; u < n; ++u) out_flow += dS[v * n + u];
            next[v] = S[v] + (in - out_flow);
        }
        S = next;
        std::copy(S.begin(), S.end(), out.row(t).begin());
    }
    if (dc_removal) {
        remove_dc(out);
    }
    return out;
}

} // namespace netaural
