#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace fillrate {

/// Deterministic random stream with portable output: mt19937_64 raw bits
/// plus hand-rolled variate mappings, so two builds with the same seed
/// produce bit-identical draws (std::normal_distribution and friends are
/// implementation-defined and would not).
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform_unit();
    }

    /// Normal variate via Box-Muller. Consumes exactly two words per call.
    double normal(double mean, double std_dev) {
        // first uniform in (0, 1] so the log is finite
        const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        const double radius = std::sqrt(-2.0 * std::log(u1));
        return mean + std_dev * radius * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Independent substream seed for (seed, salt), splitmix64 finalizer.
    /// Used to give every replication (and every grid cell) its own stream.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t salt) {
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace fillrate
