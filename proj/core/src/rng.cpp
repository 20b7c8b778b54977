#include "uavplace/rng.hpp"

namespace uavplace {

std::uint64_t mix64(std::uint64_t value) noexcept {
    value += 0x9e3779b97f4a7c15ULL;
    value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ULL;
    value = (value ^ (value >> 27)) * 0x94d049bb133111ebULL;
    return value ^ (value >> 31);
}

StreamRng::StreamRng(std::uint64_t seed, std::uint64_t stream)
    : engine_(mix64(mix64(seed) ^ stream)) {}

double StreamRng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double StreamRng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

}  // namespace uavplace
