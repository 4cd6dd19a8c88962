// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace netaural {

/// Seeded pseudo-random source used by every stochastic component.
///
/// Wraps std::mt19937_64 (whose output sequence is fixed by the standard) and
/// derives uniform/normal variates with explicit arithmetic instead of the
/// implementation-defined std distributions, so a seed produces the same
/// stream with any conforming standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in the closed range [lo, hi].
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    bool bernoulli(double p) { return uniform() < p; }

    /// Standard normal variate (Marsaglia polar method).
    double normal();

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Mixes a base seed with a stream index (splitmix64 finalizer) so that
/// independent sub-streams (per epoch, per test graph) can be reproduced
/// without replaying earlier streams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace netaural
