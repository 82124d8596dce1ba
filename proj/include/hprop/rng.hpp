#pragma once

#include <cstdint>

namespace hprop::rng {

// Counter-based generator: every variate is a pure function of
// (seed, stream tag, indices), so results do not depend on the order in
// which variates are drawn or on how work is split across threads.

constexpr std::uint64_t kStreamCoordinate = 0x636f6f7264696e61ULL;
constexpr std::uint64_t kStreamPair = 0x7061697273747265ULL;
constexpr std::uint64_t kStreamTrial = 0x747269616c736565ULL;

/// SplitMix64 finalizer.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive(std::uint64_t seed, std::uint64_t stream, std::uint64_t a,
                            std::uint64_t b = 0) {
    std::uint64_t h = mix64(seed ^ 0x5851f42d4c957f2dULL);
    h = mix64(h ^ stream);
    h = mix64(h ^ a);
    h = mix64(h ^ b);
    return h;
}

/// Uniform double in [0,1) from the top 53 bits.
inline double u01(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

}  // namespace hprop::rng
