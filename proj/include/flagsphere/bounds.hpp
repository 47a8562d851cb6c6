#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagsphere/complex.hpp"
#include "flagsphere/constructions.hpp"

namespace flagsphere {

// ceil((n + d - 3) / (2(d - 1))): the conjectured minimum of the maximum
// stable set over n-vertex flag (d-1)-sphere graphs. Needs d >= 2, n >= 2d.
long long conjectured_alpha(int d, long long n);

// ceil((ceil(n / floor(d/4)) + 1) / 6): upper bound from the join
// construction, d >= 4.
long long join_upper_bound(int d, long long n);

// (4a)^(d-2) >= n, the quarter-root lower bound in integer arithmetic.
bool quarter_root_lower_holds(long long a, long long n, int d);

struct BoundRow {
    int d = 0;
    long long n = 0;
    long long conj_value = 0;
    std::optional<long long> construction_alpha; // absent when infeasible
    std::optional<long long> upper_join;         // d >= 4 only
    bool lower_ok = false;                       // d >= 4, quarter-root bound vs alpha
    double lower_value = 0.0;                    // n^(1/(d-2))/4, display only
    std::string witness_spec;
    std::string note;
};

std::vector<BoundRow> alpha_table(int d, long long n_min, long long n_max);

struct MaxBoundRow {
    int d = 0;
    long long n = 0;
    long long conj_value = 0;   // floor((n - 2(d-2)) / 2)
    long long alpha = 0;        // exact, on the polygon suspension
    bool asserted = false;      // equality is a theorem for d in {2,3}
    bool matches = false;
};

std::vector<MaxBoundRow> alpha_max_table(int d, long long n_min, long long n_max);

// Counting argument on a flag 2-sphere: for a maximum stable set I, the
// bipartite subgraph B of edges with exactly one end in I satisfies
// 4|I| <= |B| <= 2n-4, so |I| <= floor((n-2)/2).
struct CountingReport {
    long long n = 0;
    long long stable_size = 0;
    long long cross_edges = 0;
    bool degree_sum_matches = false; // |B| equals the degree sum over I
    bool degree_lower_ok = false;    // |B| >= 4 |I|
    bool planar_upper_ok = false;    // |B| <= 2n - 4
    long long implied_bound = 0;     // floor((n-2)/2)
    bool passes = false;
};

CountingReport stable_set_counting_check(const Complex& K, uint64_t seed = 0);

// Observational edge-count report for a pure (d-1)-complex.
struct F1Report {
    int d = 0;
    long long n = 0;
    long long f1 = 0;
    double excess = 0.0;                 // f1/n - d
    double threshold_proved = 0.0;       // 0.987 / (2d + 1)
    double threshold_conjectured = 0.0;  // 1 / (2d - 2)
    bool meets_proved = false;
    bool meets_conjectured = false;
    long long g2 = 0;
    long long alpha = 0;
    long long turan_size = 0;
};

F1Report f1_report(const Complex& K, int d);

} // namespace flagsphere
