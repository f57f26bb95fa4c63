#ifndef OVERNET_RNG_HPP
#define OVERNET_RNG_HPP

#include <cstdint>
#include <random>

namespace overnet {

using Rng = std::mt19937_64;

// SplitMix64 finalizer, used to derive decorrelated seed streams from one
// experiment seed.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
    return splitmix64(base ^ splitmix64(stream + 0x9e3779b97f4a7c15ULL));
}

}  // namespace overnet

#endif
