#pragma once

#include <cstdint>
#include <random>

namespace ncheeger {

// All randomized code in the library draws from std::mt19937_64 through the
// helpers below. The engine's output sequence is fixed by the standard and
// the helpers avoid std::uniform_*_distribution (whose mapping is
// implementation-defined), so identical seeds give identical results on any
// platform.

// Uniform double in [0, 1) from the top 53 bits.
inline double rand_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n). Modulo bias is irrelevant at the tiny ranges
// used here.
inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
    return rng() % n;
}

// Uniform integer in [lo, hi], inclusive.
inline int rand_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

inline bool rand_bool(std::mt19937_64& rng) {
    return (rng() >> 63) != 0;
}

// Stateless mix used to derive independent per-instance seeds from one
// master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace ncheeger
