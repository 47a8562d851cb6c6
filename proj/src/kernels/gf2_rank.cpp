#include "flagsphere/kernels/gf2_rank.hpp"

#include <algorithm>
#include <utility>

namespace flagsphere {

namespace {

inline void xor_row(uint64_t* dst, const uint64_t* src, int words) {
    for (int w = 0; w < words; ++w) dst[w] ^= src[w];
}

} // namespace

int gf2_rank_serial(Gf2Matrix m) {
    int rank = 0;
    const int words = m.words;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r) {
            if (m.get(r, c)) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            std::swap_ranges(m.row(pivot), m.row(pivot) + words, m.row(rank));
        }
        const uint64_t* prow = m.row(rank);
        for (int r = rank + 1; r < m.rows; ++r) {
            if (m.get(r, c)) xor_row(m.row(r), prow, words);
        }
        ++rank;
    }
    return rank;
}

int gf2_rank(Gf2Matrix m) {
    int rank = 0;
    const int words = m.words;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r) {
            if (m.get(r, c)) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            std::swap_ranges(m.row(pivot), m.row(pivot) + words, m.row(rank));
        }
        const uint64_t* prow = m.row(rank);
        const int base = rank + 1;
#pragma omp parallel for schedule(static)
        for (int r = base; r < m.rows; ++r) {
            if (m.get(r, c)) xor_row(m.row(r), prow, words);
        }
        ++rank;
    }
    return rank;
}

} // namespace flagsphere
