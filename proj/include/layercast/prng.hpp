#pragma once

#include <cstdint>

namespace layercast {

/// splitmix64: tiny deterministic generator. Self-contained so seeded runs
/// reproduce byte-identically on any platform or standard library.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, n). Modulo bias is irrelevant at test scales.
    std::uint64_t bounded(std::uint64_t n) { return next() % n; }
};

}  // namespace layercast
