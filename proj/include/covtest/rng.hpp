#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "covtest/errors.hpp"

namespace covtest {

/// Finalizer of the splitmix64 generator; bijective 64-bit mixing.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

/// Counter-based stream derivation: the seed of substream `index` under
/// `master` is the `index`-th splitmix64 output of a generator seeded with
/// `master`. Substreams can be drawn in any order, on any worker.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master + kGoldenGamma * (index + 1));
}

/**
 * @brief splitmix64 stream with normal and gamma samplers.
 *
 * All draws are pure functions of the seed, so replications keyed by
 * split_seed are reproducible independent of scheduling.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += kGoldenGamma;
        return mix64(state_);
    }

    /// Uniform on (0, 1]; never returns 0, so log() is safe.
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; one spare deviate is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform()));
        const double t = 2.0 * std::numbers::pi * uniform();
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

    /// Gamma(shape, scale) via the Marsaglia-Tsang squeeze, shape >= 1 only.
    double gamma(double shape, double scale) {
        if (!(shape >= 1.0))
            throw ConfigError("Rng::gamma: shape must be >= 1");
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = 0.0;
            double v = 0.0;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform();
            const double x2 = x * x;
            if (u < 1.0 - 0.0331 * x2 * x2)
                return d * v * scale;
            if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v)))
                return d * v * scale;
        }
    }

private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace covtest
