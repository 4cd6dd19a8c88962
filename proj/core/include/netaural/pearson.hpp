// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace netaural {

/// One of the inputs to a correlation has zero variance.
class DegenerateCorrelation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Added to the prediction standard deviation inside the loss.
inline constexpr double kLossEpsilon = 1e-8;

/// Population Pearson correlation, clamped to [-1, 1].
/// Throws std::invalid_argument on length mismatch or fewer than two values,
/// DegenerateCorrelation when either input is constant.
double pearson(std::span<const double> x, std::span<const double> y);

/// True when the values have zero spread (all equal up to rounding).
bool is_constant(std::span<const double> x);

struct LossAndGradient {
    double loss = 0.0;
    /// d loss / d prediction[i]
    std::vector<double> grad;
};

/**
 * Correlation loss 1 - rho(target, prediction) and its gradient with respect
 * to the prediction.
 *
 * rho = cov(C, P) / (std(C) * (std(P) + eps)). The guard sits on the
 * prediction side only, so constant predictions give a finite loss of 1 while
 * any positive affine rescaling of the target leaves the loss unchanged.
 * The target must not be constant (DegenerateCorrelation otherwise).
 */
LossAndGradient pearson_loss(std::span<const double> target, std::span<const double> prediction,
                             double eps = kLossEpsilon);

} // namespace netaural
