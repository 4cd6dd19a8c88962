// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace netaural {

struct AdamConfig {
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

/// Adaptive-moment gradient descent over a flat float parameter vector.
class Adam {
public:
    Adam(AdamConfig config, std::size_t size);
    /// Resumes from stored moments and step count.
    Adam(AdamConfig config, std::vector<float> first, std::vector<float> second, std::size_t steps);

    void step(std::span<float> params, std::span<const float> grad);

    std::size_t steps() const { return steps_; }
    const std::vector<float>& first_moment() const { return m_; }
    const std::vector<float>& second_moment() const { return v_; }

private:
    AdamConfig config_;
    std::vector<float> m_;
    std::vector<float> v_;
    std::size_t steps_ = 0;
};

} // namespace netaural
