#pragma once

#include <cstdint>
#include <random>

// Reproducible random numbers.
//
// Generator identity: std::mt19937_64 (the 64-bit Mersenne Twister as specified
// by the C++ standard), seeded directly with a 64-bit seed. The engine output
// sequence is fully determined by the standard, so results are bit-identical
// across platforms and compilers.
//
// Uniform doubles are produced from the top 53 bits of the engine output
// ((x >> 11) * 2^-53) instead of std::uniform_real_distribution, whose mapping
// is implementation-defined.
//
// Substream seeds for worker k are derived as
//     stream_seed(seed, k) = mix(seed + (k + 1) * 0x9E3779B97F4A7C15)
// where mix is the SplitMix64 finalizer (Steele, Lea & Flood). Distinct workers
// land in statistically independent regions of the seed space.

namespace bornaudit::rng {

inline std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64_mix(seed + (stream + 1) * 0x9E3779B97F4A7C15ULL);
}

/// Uniform double in [0, 1) from the top 53 bits of the engine output.
inline double uniform_unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace bornaudit::rng
