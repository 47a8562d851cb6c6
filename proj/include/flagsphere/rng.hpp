#pragma once

#include <cstdint>
#include <initializer_list>

namespace flagsphere {

// Splittable counter-based RNG. All randomness in the project flows from a
// single 64-bit seed through derive(), so results do not depend on thread
// scheduling: every independent unit of work (trial, restart, table row)
// gets its own stream identified by integer coordinates.
struct SplitMix64 {
    uint64_t state = 0;

    explicit SplitMix64(uint64_t s = 0) : state(s) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, bound); bound > 0.
    uint64_t next_below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    double next_unit() { return double(next() >> 11) * 0x1.0p-53; }
};

// Stream derivation: fold coordinates into the seed one splitmix step each.
inline uint64_t derive_seed(uint64_t seed, std::initializer_list<uint64_t> coords) {
    SplitMix64 r(seed);
    uint64_t s = r.next();
    for (uint64_t c : coords) {
        SplitMix64 step(s ^ (c * 0x9e3779b97f4a7c15ULL));
        s = step.next();
    }
    return s;
}

inline SplitMix64 stream_rng(uint64_t seed, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
    return SplitMix64(derive_seed(seed, {a, b, c}));
}

} // namespace flagsphere
