#pragma once

#include <cstdint>

namespace frobwitt {

// SplitMix64. Tiny, seedable, identical output on every platform; good enough
// for generating test instances. Not for cryptography.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, n). Modulo bias is irrelevant at our scales.
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

}  // namespace frobwitt
