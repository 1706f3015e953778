#pragma once

#include <cstdint>
#include <random>

namespace pcgb {

/// Seeded random stream. Owned by exactly one caller; never shared across
/// threads. The integer and real mappings are implemented here rather than
/// through <random> distributions so that a seed produces the same stream
/// with any standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    /// Uniform integer in [lo, hi] (inclusive), unbiased.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    /// Uniform index in [0, n). n must be positive.
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(n) - 1));
    }

    /// Uniform real in [0, 1) with 53 bits of precision.
    double uniform_real() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform_real() < p; }

    std::uint64_t next_u64() { return engine_(); }

    /// Deterministic child seed for an independent stream (e.g. run i of an
    /// experiment). SplitMix64 finalizer over (seed, stream).
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

private:
    std::mt19937_64 engine_;
};

}  // namespace pcgb
