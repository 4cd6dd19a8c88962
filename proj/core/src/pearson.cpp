// SPDX-License-Identifier: Apache-2.0
#include "netaural/pearson.hpp"

#include <algorithm>
#include <cmath>

namespace netaural {

namespace {

struct Moments {
    double mean = 0.0;
    double stddev = 0.0;
};

Moments moments(std::span<const double> x) {
    const auto n = static_cast<double>(x.size());
    double sum = 0.0;
    for (double v : x) sum += v;
    const double mean = sum / n;
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / n)};
}

void check_lengths(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("correlation inputs differ in length");
    }
    if (x.size() < 2) {
        throw std::invalid_argument("correlation needs at least two values");
    }
}

} // namespace

bool is_constant(std::span<const double> x) {
    if (x.empty()) return true;
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    return *hi - *lo <= 1e-12 * std::max(1.0, std::max(std::abs(*lo), std::abs(*hi)));
}

double pearson(std::span<const double> x, std::span<const double> y) {
    check_lengths(x, y);
    if (is_constant(x) || is_constant(y)) {
        throw DegenerateCorrelation("correlation with a constant input is undefined");
    }
    const auto mx = moments(x);
    const auto my = moments(y);
    double cov = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        cov += (x[i] - mx.mean) * (y[i] - my.mean);
    }
    cov /= static_cast<double>(x.size());
    return std::clamp(cov / (mx.stddev * my.stddev), -1.0, 1.0);
}

LossAndGradient pearson_loss(std::span<const double> target, std::span<const double> prediction,
                             double eps) {
    check_lengths(target, prediction);
    if (is_constant(target)) {
        throw DegenerateCorrelation("loss target is constant");
    }
    const std::size_t n = target.size();
    const double nd = static_cast<double>(n);
    const auto mc = moments(target);
    const auto mp = moments(prediction);
    double cov = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cov += (target[i] - mc.mean) * (prediction[i] - mp.mean);
    }
    cov /= nd;
    const double denom = mc.stddev * (mp.stddev + eps);
    const double rho = cov / denom;

    LossAndGradient out;
    out.loss = 1.0 - rho;
    out.grad.resize(n);
    // d rho/d p_i = (c_i - c_mean) / (n * denom)
    //             - cov * (p_i - p_mean) / (n * std_p * std_c * (std_p + eps)^2)
    const double a = 1.0 / (nd * denom);
    const double b = mp.stddev > 0.0
                         ? cov / (nd * mp.stddev * mc.stddev * (mp.stddev + eps) * (mp.stddev + eps))
                         : 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double drho = a * (target[i] - mc.mean) - b * (prediction[i] - mp.mean);
        out.grad[i] = -drho;
    }
    return out;
}

} // namespace netaural
