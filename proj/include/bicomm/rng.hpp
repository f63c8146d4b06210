#pragma once

#include "bicomm/rational.hpp"

#include <cstdint>

namespace bicomm {

// Default seed used everywhere an unseeded deterministic choice is needed;
// CLI --seed overrides it.
inline constexpr std::uint64_t kDefaultSeed = 20240917ULL;

// Small deterministic generator (xorshift64*) so sampled data is identical
// across platforms and runs; the standard-library distributions are not
// portable, so ranges are derived from raw outputs only.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed = kDefaultSeed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        std::uint64_t x = state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state = x;
        return x * 0x2545F4914F6CDD1DULL;
    }

    // Uniform-ish integer in [lo, hi] (small ranges only).
    int range(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Nonzero rational with small numerator and denominator.
    Rational nonzero_rational(int max_num = 9, int max_den = 9) {
        int num = 0;
        while (num == 0) num = range(-max_num, max_num);
        int den = range(1, max_den);
        return Rational(num, den);
    }
};

} // namespace bicomm
