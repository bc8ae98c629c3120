// rng.hpp
// splitmix64: the single source of randomness in this project.
// Every consumer documents how it maps draws to decisions so a subset or
// estimate can be reproduced bit-for-bit from (seed, index) alone, in any
// language with 64-bit integers.
//
// Stream layout: the i-th output (0-based) of a stream seeded with s is
//   mix64(s + (i + 1) * kSplitMixGamma)
// which lets substreams be opened at an arbitrary index without stepping
// through the preceding draws.

#pragma once
#include <cstdint>

namespace goldbach {

inline constexpr uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ULL;

// Finalizing mix of splitmix64. Bijective on 64-bit words.
inline constexpr uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class SplitMix64 {
public:
    explicit constexpr SplitMix64(uint64_t seed) : state_(seed) {}

    constexpr uint64_t next() {
        state_ += kSplitMixGamma;
        return mix64(state_);
    }

    // Uniform draw in [0, bound), bound >= 1. Plain modulo reduction: the
    // bias is below bound / 2^64, invisible at the ranges used here.
    constexpr uint64_t next_below(uint64_t bound) {
        return next() % bound;
    }

private:
    uint64_t state_;
};

// Independent substream for (seed, index). Used for per-trial randomness:
// trial tau of a run draws only from substream(seed, tau), so trials can be
// evaluated in any order, on any number of workers, with identical results.
inline constexpr SplitMix64 substream(uint64_t seed, uint64_t index) {
    return SplitMix64(mix64(seed ^ (kSplitMixGamma * (index + 1))));
}

}  // namespace goldbach
