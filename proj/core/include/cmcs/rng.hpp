#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace cmcs {

using Rng = std::mt19937_64;

// Uniform integer in [0, n). Rejection sampling on the raw 64-bit output, so
// the sequence is identical across standard library implementations (unlike
// std::uniform_int_distribution).
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
    if (n <= 1) {
        rng();
        return 0;
    }
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % n;
    }
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives an independent stream seed from a master seed and a tuple of ids.
inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> ids) {
    std::uint64_t h = splitmix64(master);
    for (std::uint64_t id : ids) h = splitmix64(h ^ splitmix64(id + 0x632be59bd9b4e019ULL));
    return h;
}

}  // namespace cmcs
