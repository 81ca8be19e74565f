#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace falsecorr {

// All randomness flows through std::mt19937_64 (bit-exact across conforming
// implementations) seeded from an explicit 64-bit seed. Variate generation is
// implemented here rather than with std::*_distribution, whose streams are
// implementation-defined.
using Rng = std::mt19937_64;

// SplitMix64 step, used to derive independent sub-seeds (per restart, per
// Monte Carlo block) from one root seed.
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform on [0,1), 53-bit resolution.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform on (0,1]; safe as a log() argument.
inline double uniform01_open(Rng& rng) {
    return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

// Standard normal pair via Box-Muller.
inline void normal_pair(Rng& rng, double& g0, double& g1) {
    const double radius = std::sqrt(-2.0 * std::log(uniform01_open(rng)));
    const double angle = 2.0 * std::numbers::pi * uniform01(rng);
    g0 = radius * std::cos(angle);
    g1 = radius * std::sin(angle);
}

inline double normal(Rng& rng) {
    double g0, g1;
    normal_pair(rng, g0, g1);
    return g0;
}

}  // namespace falsecorr
