// SPDX-License-Identifier: Apache-2.0
#include "netaural/m5.hpp"

#include <cblas.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "netaural/rng.hpp"

namespace netaural {

void M5Config::validate() const {
    if (first_kernel != 80) {
        throw std::invalid_argument("M5 first-layer kernel must be 80");
    }
    if (output_dim != 1) {
        throw std::invalid_argument("M5 regressor has a single output");
    }
    if (first_stride == 0 || pool == 0 || later_kernel == 0) {
        throw std::invalid_argument("M5 stride, pool and kernel sizes must be positive");
    }
    if (later_kernel % 2 == 0) {
        throw std::invalid_argument("M5 later kernel must be odd (length-preserving padding)");
    }
    if (stage_channels.empty()) {
        throw std::invalid_argument("M5 needs at least one convolution stage");
    }
    for (auto c : stage_channels) {
        if (c == 0) throw std::invalid_argument("M5 stage channel counts must be positive");
    }
    if (input_length < first_kernel) {
        throw std::invalid_argument("M5 input length must be at least the first kernel size");
    }
}

void to_json(nlohmann::json& j, const M5Config& c) {
    j = nlohmann::json{{"input_length", c.input_length},   {"first_kernel", c.first_kernel},
                       {"first_stride", c.first_stride},   {"stage_channels", c.stage_channels},
                       {"later_kernel", c.later_kernel},   {"pool", c.pool},
                       {"output_dim", c.output_dim},       {"standardize_input", c.standardize_input}};
}

void from_json(const nlohmann::json& j, M5Config& c) {
    c.input_length = j.at("input_length").get<std::size_t>();
    c.first_kernel = j.at("first_kernel").get<std::size_t>();
    c.first_stride = j.at("first_stride").get<std::size_t>();
    c.stage_channels = j.at("stage_channels").get<std::vector<std::size_t>>();
    c.later_kernel = j.at("later_kernel").get<std::size_t>();
    c.pool = j.at("pool").get<std::size_t>();
    c.output_dim = j.at("output_dim").get<std::size_t>();
    c.standardize_input = j.value("standardize_input", false);
}

M5Config small_m5_config(std::size_t input_length) {
    M5Config c;
    c.input_length = input_length;
    c.stage_channels = {16, 16, 32, 32};
    return c;
}

M5Layout::M5Layout(const M5Config& config) : config_(config) {
    config_.validate();
    auto add_param = [this](std::string name, std::vector<std::size_t> shape) {
        std::size_t size = 1;
        for (auto d : shape) size *= d;
        parameters_.push_back({std::move(name), std::move(shape), parameter_count_, size});
        parameter_count_ += size;
        return parameters_.back().offset;
    };
    auto add_buffer = [this](std::string name, std::size_t size) {
        buffers_.push_back({std::move(name), {size}, buffer_count_, size});
        buffer_count_ += size;
        return buffers_.back().offset;
    };

    std::size_t channels = 1;
    std::size_t length = config_.input_length;
    for (std::size_t i = 0; i < config_.stage_channels.size(); ++i) {
        M5Stage s;
        s.in_channels = channels;
        s.out_channels = config_.stage_channels[i];
        s.kernel = i == 0 ? config_.first_kernel : config_.later_kernel;
        s.stride = i == 0 ? config_.first_stride : 1;
        s.padding = i == 0 ? 0 : (config_.later_kernel - 1) / 2;
        s.in_length = length;
        s.conv_length = (length + 2 * s.padding - s.kernel) / s.stride + 1;
        s.pooled_length = (s.conv_length + config_.pool - 1) / config_.pool;

        const std::string idx = std::to_string(i);
        s.weight = add_param("conv" + idx + ".weight", {s.out_channels, s.in_channels, s.kernel});
        s.bias = add_param("conv" + idx + ".bias", {s.out_channels});
        s.gamma = add_param("bn" + idx + ".weight", {s.out_channels});
        s.beta = add_param("bn" + idx + ".bias", {s.out_channels});
        s.running_mean = add_buffer("bn" + idx + ".running_mean", s.out_channels);
        s.running_var = add_buffer("bn" + idx + ".running_var", s.out_channels);
        stages_.push_back(s);

        channels = s.out_channels;
        length = s.pooled_length;
    }
    fc_weight_ = add_param("fc.weight", {config_.output_dim, channels});
    fc_bias_ = add_param("fc.bias", {config_.output_dim});
}

namespace {

void gemm(bool trans_a, bool trans_b, std::size_t m, std::size_t n, std::size_t k, float alpha,
          const float* a, std::size_t lda, const float* b, std::size_t ldb, float beta, float* c,
          std::size_t ldc) {
    cblas_sgemm(CblasRowMajor, trans_a ? CblasTrans : CblasNoTrans, trans_b ? CblasTrans : CblasNoTrans,
                static_cast<int>(m), static_cast<int>(n), static_cast<int>(k), alpha, a,
                static_cast<int>(lda), b, static_cast<int>(ldb), beta, c, static_cast<int>(ldc));
}

void gemm(bool trans_a, bool trans_b, std::size_t m, std::size_t n, std::size_t k, double alpha,
          const double* a, std::size_t lda, const double* b, std::size_t ldb, double beta, double* c,
          std::size_t ldc) {
    cblas_dgemm(CblasRowMajor, trans_a ? CblasTrans : CblasNoTrans, trans_b ? CblasTrans : CblasNoTrans,
                static_cast<int>(m), static_cast<int>(n), static_cast<int>(k), alpha, a,
                static_cast<int>(lda), b, static_cast<int>(ldb), beta, c, static_cast<int>(ldc));
}

/// col[(ci*K + j), t] = x[ci, t*stride + j - padding], zero outside.
template <typename T>
void im2col(const M5Stage& s, const T* x, T* col) {
    const std::size_t L = s.conv_length;
    for (std::size_t ci = 0; ci < s.in_channels; ++ci) {
        const T* xc = x + ci * s.in_length;
        for (std::size_t j = 0; j < s.kernel; ++j) {
            T* row = col + (ci * s.kernel + j) * L;
            for (std::size_t t = 0; t < L; ++t) {
                const auto pos = static_cast<std::ptrdiff_t>(t * s.stride + j) -
                                 static_cast<std::ptrdiff_t>(s.padding);
                row[t] = (pos >= 0 && pos < static_cast<std::ptrdiff_t>(s.in_length)) ? xc[pos] : T(0);
            }
        }
    }
}

/// Adjoint of im2col: accumulates col back into dx (which must be zeroed).
template <typename T>
void col2im(const M5Stage& s, const T* col, T* dx) {
    const std::size_t L = s.conv_length;
    for (std::size_t ci = 0; ci < s.in_channels; ++ci) {
        T* xc = dx + ci * s.in_length;
        for (std::size_t j = 0; j < s.kernel; ++j) {
            const T* row = col + (ci * s.kernel + j) * L;
            for (std::size_t t = 0; t < L; ++t) {
                const auto pos = static_cast<std::ptrdiff_t>(t * s.stride + j) -
                                 static_cast<std::ptrdiff_t>(s.padding);
                if (pos >= 0 && pos < static_cast<std::ptrdiff_t>(s.in_length)) {
                    xc[pos] += row[t];
                }
            }
        }
    }
}

/// z = W * im2col(x) + bias for one node.
template <typename T>
void conv_forward(const M5Stage& s, const T* params, const T* x, T* col, T* z) {
    im2col(s, x, col);
    const std::size_t L = s.conv_length;
    const std::size_t K = s.in_channels * s.kernel;
    for (std::size_t c = 0; c < s.out_channels; ++c) {
        std::fill(z + c * L, z + (c + 1) * L, params[s.bias + c]);
    }
    gemm(false, false, s.out_channels, L, K, T(1), params + s.weight, K, col, L, T(1), z, L);
}

/// Ceil-mode max pool over `length` samples; writes the winning index when
/// argmax is non-null.
template <typename T>
void max_pool(const T* a, std::size_t length, std::size_t pool, T* out, std::uint32_t* argmax) {
    const std::size_t pooled = (length + pool - 1) / pool;
    for (std::size_t i = 0; i < pooled; ++i) {
        const std::size_t begin = i * pool;
        const std::size_t end = std::min(begin + pool, length);
        std::size_t best = begin;
        for (std::size_t t = begin + 1; t < end; ++t) {
            if (a[t] > a[best]) best = t;
        }
        out[i] = a[best];
        if (argmax) argmax[i] = static_cast<std::uint32_t>(best);
    }
}

} // namespace

template <typename T>
M5Network<T>::M5Network(M5Config config, std::vector<T> parameters, std::vector<T> buffers)
    : layout_(config), params_(std::move(parameters)), buffers_(std::move(buffers)) {
    if (params_.size() != layout_.parameter_count() || buffers_.size() != layout_.buffer_count()) {
        throw std::invalid_argument("M5 parameter vector does not match configuration");
    }
}

template <typename T>
M5Network<T> M5Network<T>::initialized(const M5Config& config, std::uint64_t seed) {
    const M5Layout layout(config);
    std::vector<T> params(layout.parameter_count(), T(0));
    std::vector<T> buffers(layout.buffer_count(), T(0));
    Rng rng(seed);
    for (const auto& s : layout.stages()) {
        const double fan_in = static_cast<double>(s.in_channels * s.kernel);
        const double sd = std::sqrt(2.0 / fan_in);
        const std::size_t count = s.out_channels * s.in_channels * s.kernel;
        for (std::size_t i = 0; i < count; ++i) {
            params[s.weight + i] = static_cast<T>(sd * rng.normal());
        }
        std::fill_n(params.begin() + static_cast<std::ptrdiff_t>(s.gamma), s.out_channels, T(1));
        std::fill_n(buffers.begin() + static_cast<std::ptrdiff_t>(s.running_var), s.out_channels, T(1));
    }
    const std::size_t last = layout.stages().back().out_channels;
    const double bound = 1.0 / std::sqrt(static_cast<double>(last));
    for (std::size_t i = 0; i < last; ++i) {
        params[layout.fc_weight() + i] = static_cast<T>(rng.uniform(-bound, bound));
    }
    return M5Network(config, std::move(params), std::move(buffers));
}

template <typename T>
std::vector<T> M5Network<T>::forward(std::span<const T> inputs, std::size_t n) const {
    const auto& stages = layout_.stages();
    const std::size_t length = layout_.config().input_length;
    if (inputs.size() != n * length) {
        throw std::invalid_argument("M5 input size does not match n x input_length");
    }
    std::size_t max_col = 0, max_conv = 0, max_pool_len = 0;
    for (const auto& s : stages) {
        max_col = std::max(max_col, s.in_channels * s.kernel * s.conv_length);
        max_conv = std::max(max_conv, s.out_channels * s.conv_length);
        max_pool_len = std::max(max_pool_len, s.out_channels * s.pooled_length);
    }
    std::vector<T> col(max_col), z(max_conv), a(max_pool_len), b(max_pool_len);
    std::vector<T> scale, shift;
    std::vector<T> out(n);
    const T* p = params_.data();

    for (std::size_t node = 0; node < n; ++node) {
        const T* x = inputs.data() + node * length;
        for (const auto& s : stages) {
            conv_forward(s, p, x, col.data(), z.data());
            const std::size_t L = s.conv_length;
            for (std::size_t c = 0; c < s.out_channels; ++c) {
                const double invstd = 1.0 / std::sqrt(static_cast<double>(buffers_[s.running_var + c]) +
                                                      kBatchNormEpsilon);
                const T sc = static_cast<T>(static_cast<double>(p[s.gamma + c]) * invstd);
                const T sh = static_cast<T>(static_cast<double>(p[s.beta + c]) -
                                            static_cast<double>(buffers_[s.running_mean + c]) *
                                                static_cast<double>(sc));
                T* zc = z.data() + c * L;
                for (std::size_t t = 0; t < L; ++t) {
                    zc[t] = std::max(T(0), zc[t] * sc + sh);
                }
                max_pool(zc, L, layout_.config().pool, a.data() + c * s.pooled_length, nullptr);
            }
            std::swap(a, b);
            x = b.data();
        }
        const auto& last = stages.back();
        T acc = p[layout_.fc_bias()];
        for (std::size_t c = 0; c < last.out_channels; ++c) {
            T mean = 0;
            for (std::size_t t = 0; t < last.pooled_length; ++t) mean += x[c * last.pooled_length + t];
            mean /= static_cast<T>(last.pooled_length);
            acc += p[layout_.fc_weight() + c] * mean;
        }
        out[node] = acc;
    }
    return out;
}

template <typename T>
std::vector<T> M5Network<T>::forward_train(std::span<const T> inputs, std::size_t n, Cache& cache) const {
    const auto& stages = layout_.stages();
    const std::size_t length = layout_.config().input_length;
    if (inputs.size() != n * length) {
        throw std::invalid_argument("M5 input size does not match n x input_length");
    }
    if (n == 0) {
        throw std::invalid_argument("M5 training batch is empty");
    }
    const T* p = params_.data();
    cache.n = n;
    cache.stages.assign(stages.size(), {});
    std::vector<T> next(inputs.begin(), inputs.end());

    for (std::size_t si = 0; si < stages.size(); ++si) {
        const auto& s = stages[si];
        auto& sc = cache.stages[si];
        sc.input = std::move(next);
        const std::size_t L = s.conv_length;
        const std::size_t C = s.out_channels;
        const std::size_t node_in = s.in_channels * s.in_length;
        std::vector<T> col(s.in_channels * s.kernel * L);
        sc.normalized.resize(n * C * L);
        for (std::size_t node = 0; node < n; ++node) {
            conv_forward(s, p, sc.input.data() + node * node_in, col.data(),
                         sc.normalized.data() + node * C * L);
        }
        // Batch statistics per channel over all nodes and positions.
        const double count = static_cast<double>(n * L);
        sc.mean.assign(C, 0.0);
        sc.var.assign(C, 0.0);
        sc.invstd.assign(C, 0.0);
        for (std::size_t c = 0; c < C; ++c) {
            double sum = 0.0;
            for (std::size_t node = 0; node < n; ++node) {
                const T* zc = sc.normalized.data() + (node * C + c) * L;
                for (std::size_t t = 0; t < L; ++t) sum += zc[t];
            }
            const double mean = sum / count;
            double ss = 0.0;
            for (std::size_t node = 0; node < n; ++node) {
                const T* zc = sc.normalized.data() + (node * C + c) * L;
                for (std::size_t t = 0; t < L; ++t) {
                    const double d = static_cast<double>(zc[t]) - mean;
                    ss += d * d;
                }
            }
            sc.mean[c] = mean;
            sc.var[c] = ss / count;
            sc.invstd[c] = 1.0 / std::sqrt(sc.var[c] + kBatchNormEpsilon);
        }
        next.assign(n * C * s.pooled_length, T(0));
        sc.argmax.resize(n * C * s.pooled_length);
        std::vector<T> act(L);
        for (std::size_t node = 0; node < n; ++node) {
            for (std::size_t c = 0; c < C; ++c) {
                T* zc = sc.normalized.data() + (node * C + c) * L;
                const T mean = static_cast<T>(sc.mean[c]);
                const T invstd = static_cast<T>(sc.invstd[c]);
                const T gamma = p[s.gamma + c];
                const T beta = p[s.beta + c];
                for (std::size_t t = 0; t < L; ++t) {
                    zc[t] = (zc[t] - mean) * invstd;
                    act[t] = std::max(T(0), gamma * zc[t] + beta);
                }
                const std::size_t off = (node * C + c) * s.pooled_length;
                max_pool(act.data(), L, layout_.config().pool, next.data() + off, sc.argmax.data() + off);
            }
        }
    }

    const auto& last = stages.back();
    const std::size_t C = last.out_channels;
    cache.pooled.assign(n * C, T(0));
    std::vector<T> out(n);
    for (std::size_t node = 0; node < n; ++node) {
        T acc = p[layout_.fc_bias()];
        for (std::size_t c = 0; c < C; ++c) {
            T mean = 0;
            const T* xc = next.data() + (node * C + c) * last.pooled_length;
            for (std::size_t t = 0; t < last.pooled_length; ++t) mean += xc[t];
            mean /= static_cast<T>(last.pooled_length);
            cache.pooled[node * C + c] = mean;
            acc += p[layout_.fc_weight() + c] * mean;
        }
        out[node] = acc;
    }
    return out;
}

template <typename T>
std::vector<T> M5Network<T>::backward(const Cache& cache, std::span<const T> grad_output) const {
    const auto& stages = layout_.stages();
    const std::size_t n = cache.n;
    if (grad_output.size() != n) {
        throw std::invalid_argument("M5 backward: gradient size does not match batch");
    }
    const T* p = params_.data();
    std::vector<T> grad(params_.size(), T(0));

    // Linear head and global average pool.
    const auto& last = stages.back();
    std::size_t C = last.out_channels;
    std::vector<T> d_pooled(n * C * last.pooled_length);
    for (std::size_t node = 0; node < n; ++node) {
        const T g = grad_output[node];
        grad[layout_.fc_bias()] += g;
        for (std::size_t c = 0; c < C; ++c) {
            grad[layout_.fc_weight() + c] += g * cache.pooled[node * C + c];
            const T dmean = g * p[layout_.fc_weight() + c] / static_cast<T>(last.pooled_length);
            std::fill_n(d_pooled.begin() + static_cast<std::ptrdiff_t>((node * C + c) * last.pooled_length),
                        last.pooled_length, dmean);
        }
    }

    for (std::size_t si = stages.size(); si-- > 0;) {
        const auto& s = stages[si];
        const auto& sc = cache.stages[si];
        C = s.out_channels;
        const std::size_t L = s.conv_length;
        const std::size_t Lp = s.pooled_length;

        // Route pooled gradients to the max positions, then through ReLU.
        std::vector<T> dy(n * C * L, T(0));
        for (std::size_t i = 0; i < n * C; ++i) {
            T* row = dy.data() + i * L;
            for (std::size_t j = 0; j < Lp; ++j) {
                row[sc.argmax[i * Lp + j]] += d_pooled[i * Lp + j];
            }
        }
        std::vector<double> dgamma(C, 0.0), dbeta(C, 0.0);
        for (std::size_t node = 0; node < n; ++node) {
            for (std::size_t c = 0; c < C; ++c) {
                const T gamma = p[s.gamma + c];
                const T beta = p[s.beta + c];
                const T* xh = sc.normalized.data() + (node * C + c) * L;
                T* d = dy.data() + (node * C + c) * L;
                double dg = 0.0, db = 0.0;
                for (std::size_t t = 0; t < L; ++t) {
                    if (gamma * xh[t] + beta <= T(0)) d[t] = T(0);
                    dg += static_cast<double>(d[t]) * static_cast<double>(xh[t]);
                    db += static_cast<double>(d[t]);
                }
                dgamma[c] += dg;
                dbeta[c] += db;
            }
        }
        for (std::size_t c = 0; c < C; ++c) {
            grad[s.gamma + c] += static_cast<T>(dgamma[c]);
            grad[s.beta + c] += static_cast<T>(dbeta[c]);
        }
        // Batch-norm backward, in place: dz = gamma*invstd*(dy - mean(dy) - xhat*mean(dy*xhat)).
        const double count = static_cast<double>(n * L);
        std::vector<double> dbias(C, 0.0);
        for (std::size_t node = 0; node < n; ++node) {
            for (std::size_t c = 0; c < C; ++c) {
                const T k = static_cast<T>(static_cast<double>(p[s.gamma + c]) * sc.invstd[c]);
                const T mdy = static_cast<T>(dbeta[c] / count);
                const T mdyx = static_cast<T>(dgamma[c] / count);
                const T* xh = sc.normalized.data() + (node * C + c) * L;
                T* d = dy.data() + (node * C + c) * L;
                double db = 0.0;
                for (std::size_t t = 0; t < L; ++t) {
                    d[t] = k * (d[t] - mdy - xh[t] * mdyx);
                    db += static_cast<double>(d[t]);
                }
                dbias[c] += db;
            }
        }
        for (std::size_t c = 0; c < C; ++c) {
            grad[s.bias + c] += static_cast<T>(dbias[c]);
        }

        // Convolution weights and, below the first stage, inputs.
        const std::size_t K = s.in_channels * s.kernel;
        const std::size_t node_in = s.in_channels * s.in_length;
        std::vector<T> col(K * L);
        std::vector<T> dcol(si > 0 ? K * L : 0);
        std::vector<T> dx(si > 0 ? n * node_in : 0, T(0));
        for (std::size_t node = 0; node < n; ++node) {
            const T* dz = dy.data() + node * C * L;
            im2col(s, sc.input.data() + node * node_in, col.data());
            gemm(false, true, C, K, L, T(1), dz, L, col.data(), L, T(1), grad.data() + s.weight, K);
            if (si > 0) {
                gemm(true, false, K, L, C, T(1), p + s.weight, K, dz, L, T(0), dcol.data(), L);
                col2im(s, dcol.data(), dx.data() + node * node_in);
            }
        }
        d_pooled = std::move(dx);
    }
    return grad;
}

template <typename T>
void M5Network<T>::update_running_stats(const Cache& cache, double momentum) {
    const auto& stages = layout_.stages();
    for (std::size_t si = 0; si < stages.size(); ++si) {
        const auto& s = stages[si];
        const auto& sc = cache.stages[si];
        const double count = static_cast<double>(cache.n * s.conv_length);
        const double unbias = count > 1.0 ? count / (count - 1.0) : 1.0;
        for (std::size_t c = 0; c < s.out_channels; ++c) {
            T& rm = buffers_[s.running_mean + c];
            T& rv = buffers_[s.running_var + c];
            rm = static_cast<T>((1.0 - momentum) * static_cast<double>(rm) + momentum * sc.mean[c]);
            rv = static_cast<T>((1.0 - momentum) * static_cast<double>(rv) + momentum * sc.var[c] * unbias);
        }
    }
}

template class M5Network<float>;
template class M5Network<double>;

template <typename T>
std::vector<T> prepare_inputs(const WaveformMatrix& w, bool standardize) {
    const std::size_t l = w.samples();
    const std::size_t n = w.nodes();
    double scale = 1.0;
    if (standardize) {
        double sum = 0.0, ss = 0.0;
        for (double x : w.data()) sum += x;
        const double mean = sum / static_cast<double>(w.data().size());
        for (double x : w.data()) ss += (x - mean) * (x - mean);
        const double sd = std::sqrt(ss / static_cast<double>(w.data().size()));
        scale = sd > 0.0 ? 1.0 / sd : 1.0;
    }
    std::vector<T> out(n * l);
    for (std::size_t t = 0; t < l; ++t) {
        const auto row = w.row(t);
        for (std::size_t v = 0; v < n; ++v) {
            out[v * l + t] = static_cast<T>(row[v] * scale);
        }
    }
    return out;
}

template std::vector<float> prepare_inputs<float>(const WaveformMatrix&, bool);
template std::vector<double> prepare_inputs<double>(const WaveformMatrix&, bool);

} // namespace netaural
