#include "flagsphere/kernels/modp_rank.hpp"

#include <algorithm>
#include <utility>

namespace flagsphere {

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t p) {
    uint64_t r = 1;
    base %= p;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, p);
        base = mulmod_u64(base, base, p);
        exp >>= 1;
    }
    return r;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

uint64_t random_prime_61(SplitMix64& rng) {
    for (;;) {
        uint64_t c = (1ULL << 61) + rng.next_below(1ULL << 61);
        c |= 1;
        if (is_prime_u64(c)) return c;
    }
}

namespace {

inline uint64_t submod(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }

// dst -= f * src
inline void eliminate_row(uint64_t* dst, const uint64_t* src, uint64_t f, int cols, uint64_t p) {
    for (int c = 0; c < cols; ++c) {
        if (src[c]) dst[c] = submod(dst[c], mulmod_u64(f, src[c], p), p);
    }
}

template <bool Parallel>
int rank_impl(ModpMatrix& m) {
    const uint64_t p = m.p;
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r) {
            if (m.at(r, c) != 0) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            std::swap_ranges(m.row(pivot), m.row(pivot) + m.cols, m.row(rank));
        }
        const uint64_t inv = powmod_u64(m.at(rank, c), p - 2, p);
        const uint64_t* prow = m.row(rank);
        const int base = rank + 1;
        if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
            for (int r = base; r < m.rows; ++r) {
                uint64_t v = m.at(r, c);
                if (v) eliminate_row(m.row(r), prow, mulmod_u64(v, inv, p), m.cols, p);
            }
        } else {
            for (int r = base; r < m.rows; ++r) {
                uint64_t v = m.at(r, c);
                if (v) eliminate_row(m.row(r), prow, mulmod_u64(v, inv, p), m.cols, p);
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace

int modp_rank_serial(ModpMatrix m) { return rank_impl<false>(m); }

int modp_rank(ModpMatrix m) { return rank_impl<true>(m); }

} // namespace flagsphere
