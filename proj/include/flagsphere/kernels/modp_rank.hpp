#pragma once

#include <cstdint>
#include <vector>

#include "flagsphere/rng.hpp"

namespace flagsphere {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
    return uint64_t((unsigned __int128)a * b % p);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t p);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

// Random prime in [2^61, 2^62).
uint64_t random_prime_61(SplitMix64& rng);

// Dense matrix over Z/p, row-major, entries reduced mod p.
struct ModpMatrix {
    int rows = 0;
    int cols = 0;
    uint64_t p = 0;
    std::vector<uint64_t> a;

    ModpMatrix() = default;
    ModpMatrix(int r, int c, uint64_t prime)
        : rows(r), cols(c), p(prime), a(size_t(r) * size_t(c), 0) {}

    uint64_t& at(int r, int c) { return a[size_t(r) * cols + c]; }
    uint64_t at(int r, int c) const { return a[size_t(r) * cols + c]; }
    uint64_t* row(int r) { return a.data() + size_t(r) * cols; }
    const uint64_t* row(int r) const { return a.data() + size_t(r) * cols; }
};

// Serial reference implementation, kept for testing the parallel kernel.
int modp_rank_serial(ModpMatrix m);

// OpenMP row-elimination kernel; same pivoting order as the serial version.
int modp_rank(ModpMatrix m);

} // namespace flagsphere
