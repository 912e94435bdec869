#pragma once

#include <cassert>
#include <cstdint>
#include <random>

namespace ttpedo {

// All randomised operators draw from one explicitly seeded engine so that a
// run is reproducible from its seed alone. The helpers below avoid
// std::*_distribution, whose output sequences differ between standard
// library implementations.
using Rng = std::mt19937_64;

/// Uniform integer in [0, n). n must be positive.
inline std::uint64_t rand_below(Rng& rng, std::uint64_t n) {
    assert(n > 0);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = rng();
    while (x >= limit) {
        x = rng();
    }
    return x % n;
}

inline std::size_t rand_index(Rng& rng, std::size_t size) {
    return static_cast<std::size_t>(rand_below(rng, size));
}

/// Uniform double in [0, 1) with 53 random bits.
inline double rand_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool rand_chance(Rng& rng, double p) {
    return rand_unit(rng) < p;
}

}  // namespace ttpedo
