// SPDX-License-Identifier: Apache-2.0
#include "netaural/optimizer.hpp"

#include <cmath>
#include <stdexcept>

namespace netaural {

Adam::Adam(AdamConfig config, std::size_t size) : config_(config), m_(size, 0.0f), v_(size, 0.0f) {}

Adam::Adam(AdamConfig config, std::vector<float> first, std::vector<float> second, std::size_t steps)
    : config_(config), m_(std::move(first)), v_(std::move(second)), steps_(steps) {
    if (m_.size() != v_.size()) {
        throw std::invalid_argument("Adam moment vectors differ in size");
    }
}

void Adam::step(std::span<float> params, std::span<const float> grad) {
    if (params.size() != m_.size() || grad.size() != m_.size()) {
        throw std::invalid_argument("Adam step: size mismatch");
    }
    ++steps_;
    const double b1 = config_.beta1;
    const double b2 = config_.beta2;
    const double correction1 = 1.0 - std::pow(b1, static_cast<double>(steps_));
    const double correction2 = 1.0 - std::pow(b2, static_cast<double>(steps_));
    const double step_size = config_.learning_rate / correction1;
    const double sqrt_c2 = std::sqrt(correction2);
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double g = grad[i];
        const double m = b1 * m_[i] + (1.0 - b1) * g;
        const double v = b2 * v_[i] + (1.0 - b2) * g * g;
        m_[i] = static_cast<float>(m);
        v_[i] = static_cast<float>(v);
        params[i] -= static_cast<float>(step_size * m / (std::sqrt(v) / sqrt_c2 + config_.epsilon));
    }
}

} // namespace netaural
