#pragma once

#include <cstdint>
#include <random>

namespace uavplace {

// Stream identifiers. Every consumer of randomness draws from its own
// stream so that changing how many numbers one stage consumes never shifts
// the numbers seen by another.
//
//   kUserStream              user placement, floor by floor, (x, y) per user
//   kPsoInitStream           swarm initialization, particle by particle, x/y/z
//   kPsoIterationStream + t  iteration t (1-based), particle by particle,
//                            r1[0..2] then r2[0..2]
inline constexpr std::uint64_t kUserStream = 1;
inline constexpr std::uint64_t kPsoInitStream = 2;
inline constexpr std::uint64_t kPsoIterationStream = 1'000;

/// SplitMix64 finalizer; used only to derive stream seeds.
std::uint64_t mix64(std::uint64_t value) noexcept;

/// 64-bit Mersenne Twister keyed by (seed, stream). The engine and the
/// 53-bit double conversion are both fully specified, so a given key yields
/// the same sequence on every platform and standard library.
class StreamRng {
public:
    StreamRng(std::uint64_t seed, std::uint64_t stream);

    /// Uniform on [0, 1).
    double uniform();
    /// Uniform on [lo, hi).
    double uniform(double lo, double hi);

private:
    std::mt19937_64 engine_;
};

}  // namespace uavplace
