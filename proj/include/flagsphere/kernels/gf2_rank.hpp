#pragma once

#include <cstdint>
#include <vector>

namespace flagsphere {

// Dense bit-packed matrix over the two-element field, row-major.
struct Gf2Matrix {
    int rows = 0;
    int cols = 0;
    int words = 0; // 64-bit words per row
    std::vector<uint64_t> bits;

    Gf2Matrix() = default;
    Gf2Matrix(int r, int c)
        : rows(r), cols(c), words(c > 0 ? (c + 63) / 64 : 0), bits(size_t(r) * size_t(words), 0) {}

    void set(int r, int c) { bits[size_t(r) * words + (c >> 6)] |= 1ULL << (c & 63); }
    bool get(int r, int c) const { return (bits[size_t(r) * words + (c >> 6)] >> (c & 63)) & 1; }
    uint64_t* row(int r) { return bits.data() + size_t(r) * words; }
    const uint64_t* row(int r) const { return bits.data() + size_t(r) * words; }
};

// Serial reference implementation, kept for testing the parallel kernel.
int gf2_rank_serial(Gf2Matrix m);

// OpenMP row-elimination kernel. Identical pivoting order to the serial
// version, so both return the same rank on the same input.
int gf2_rank(Gf2Matrix m);

} // namespace flagsphere
