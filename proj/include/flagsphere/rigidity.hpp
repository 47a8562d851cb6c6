#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "flagsphere/complex.hpp"
#include "flagsphere/kernels/modp_rank.hpp"

namespace flagsphere {

// Rigidity matrix of a d-dimensional framework over Z/p: one row per edge
// {u,v} with p_u - p_v in u's block of columns and the negative in v's.
// coords has d entries per vertex, reduced mod p.
ModpMatrix rigidity_matrix(const Graph& G, int d, std::span<const uint64_t> coords, uint64_t p);

struct GenericRankResult {
    long long rank = 0;          // max over trials
    int trials = 0;
    long double fail_prob = 0.0; // Schwartz-Zippel bound on under-estimation
};

// Monte Carlo lower bound on the generic rank of the rigidity matrix:
// random prime around 2^61 and random coordinates per trial, max over
// trials. Equals the generic rank except with the reported probability.
GenericRankResult generic_rank(const Graph& G, int d, uint64_t seed, int trials);

// f1 - d*f0 + binom(d+1, 2); K must be pure of dimension d-1.
long long g2_value(const Complex& K, int d);

struct RigidityReport {
    int d = 0;
    long long n = 0;
    long long f1 = 0;
    long long rank = 0;
    long long expected_rank = 0; // d*n - binom(d+1,2)
    long long stress_dim = 0;    // f1 - rank
    long long g2 = 0;
    long long alpha_witness = 0;
    bool generically_d_rigid = false;
    bool stress_ge_alpha = false;
    int probe_r = 0;             // dimension used for the extra probe, 0 = skipped
    bool d_plus_1_rigid = false; // probe outcome
    // f1 >= (d + 0.987/(2d+1)) n, evaluated in integers; informational only
    bool f1_bound_observed = false;
    int trials = 0;
    long double fail_prob = 0.0;
};

// Rank, stress dimension, g2 and exact alpha for any complex whose skeleton
// is of interest; no sphere precondition. probe_r = 0 skips the probe.
RigidityReport rigidity_report(const Complex& K, int d, uint64_t seed = 0, int trials = 3,
                               int probe_r = 0);

// Same report with the stress-count preconditions enforced: K must be a pure
// flag (d-1)-complex with d >= 4. Records the inequality g2 >= alpha.
RigidityReport stress_inequality_check(const Complex& K, int d, uint64_t seed = 0, int trials = 3);

// True when the skeleton has full generic rank for embedding dimension r,
// i.e. rank = r*n - binom(r+1,2).
bool rigidity_probe(const Complex& K, int r, uint64_t seed = 0, int trials = 3);

inline long long binom2(long long k) { return k * (k - 1) / 2; }

} // namespace flagsphere
