#include "flagsphere/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "flagsphere/errors.hpp"
#include "flagsphere/rigidity.hpp"
#include "flagsphere/verify.hpp"

namespace flagsphere {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

} // namespace

long long conjectured_alpha(int d, long long n) {
    if (d < 2 || n < 2 * d) throw InvalidInput("conjectured alpha needs d >= 2 and n >= 2d");
    return ceil_div(n + d - 3, 2 * (d - 1));
}

long long join_upper_bound(int d, long long n) {
    if (d < 4 || n < 2 * d) throw InvalidInput("join upper bound needs d >= 4 and n >= 2d");
    return ceil_div(ceil_div(n, d / 4) + 1, 6);
}

bool quarter_root_lower_holds(long long a, long long n, int d) {
    if (a <= 0) return false;
    unsigned __int128 lhs = 1;
    for (int i = 0; i < d - 2; ++i) {
        lhs *= (unsigned __int128)(4 * a);
        if (lhs > (unsigned __int128)1 << 100) return true;
    }
    return lhs >= (unsigned __int128)n;
}

std::vector<BoundRow> alpha_table(int d, long long n_min, long long n_max) {
    std::vector<BoundRow> rows;
    for (long long n = std::max<long long>(n_min, 2 * d); n <= n_max; ++n) {
        BoundRow row;
        row.d = d;
        row.n = n;
        row.conj_value = conjectured_alpha(d, n);
        if (d >= 4) {
            row.upper_join = join_upper_bound(d, n);
            row.lower_value = std::pow(double(n), 1.0 / (d - 2)) / 4.0;
        }
        try {
            ConstructionSpec spec = find_alpha_witness_spec(d, n);
            row.witness_spec = spec.to_string();
            Complex K = build(spec);
            auto w = alpha_exact(skeleton_graph(K));
            row.construction_alpha = w.size;
            if (!w.optimal) row.note = "solver budget exceeded";
            if (d >= 4) row.lower_ok = quarter_root_lower_holds(w.size, n, d);
        } catch (const InvalidSpec& e) {
            row.note = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<MaxBoundRow> alpha_max_table(int d, long long n_min, long long n_max) {
    std::vector<MaxBoundRow> rows;
    for (long long n = std::max<long long>(n_min, 2 * d); n <= n_max; ++n) {
        MaxBoundRow row;
        row.d = d;
        row.n = n;
        row.conj_value = (n - 2 * (d - 2)) / 2;
        Complex K = polygon_suspension(d, int(n));
        row.alpha = alpha_exact(skeleton_graph(K)).size;
        row.asserted = (d == 2 || d == 3);
        row.matches = (row.alpha == row.conj_value);
        if (row.asserted && !row.matches) {
            throw PreconditionFailed("polygon suspension alpha disagrees with the closed form at n=" +
                                     std::to_string(n));
        }
        rows.push_back(row);
    }
    return rows;
}

CountingReport stable_set_counting_check(const Complex& K, uint64_t seed) {
    if (K.dim() != 2) throw PreconditionFailed("counting check needs a 2-dimensional complex");
    if (!is_flag(K)) throw PreconditionFailed("counting check needs a flag complex");
    VerifyOptions opt;
    opt.seed = seed;
    SphereCert cert = verify_sphere(K, opt);
    if (cert.verdict != SphereVerdict::CertifiedSphere) {
        throw PreconditionFailed("counting check needs a certified sphere: " + cert.reason);
    }

    Graph G = skeleton_graph(K);
    auto w = alpha_exact(G);
    CountingReport r;
    r.n = G.n;
    r.stable_size = w.size;
    std::vector<char> in_I(size_t(G.n), 0);
    for (int v : w.vertices) in_I[size_t(v)] = 1;
    long long cross = 0;
    for (auto [u, v] : G.edges()) {
        if (in_I[size_t(u)] != in_I[size_t(v)]) ++cross;
    }
    r.cross_edges = cross;
    long long degree_sum = 0;
    for (int v : w.vertices) degree_sum += G.degree(v);
    r.degree_sum_matches = (degree_sum == cross);
    r.degree_lower_ok = (cross >= 4 * r.stable_size);
    r.planar_upper_ok = (cross <= 2 * r.n - 4);
    r.implied_bound = (r.n - 2) / 2;
    r.passes = r.degree_sum_matches && r.degree_lower_ok && r.planar_upper_ok &&
               r.stable_size <= r.implied_bound;
    return r;
}

F1Report f1_report(const Complex& K, int d) {
    if (!K.is_pure() || K.dim() != d - 1) throw DimMismatch("edge report needs a pure (d-1)-complex");
    Graph G = skeleton_graph(K);
    F1Report r;
    r.d = d;
    r.n = G.n;
    r.f1 = G.m;
    r.excess = double(r.f1) / double(r.n) - d;
    r.threshold_proved = 0.987 / (2 * d + 1);
    r.threshold_conjectured = 1.0 / (2 * d - 2);
    // integer forms: 1000 (2d+1)(f1 - dn) >= 987 n and (2d-2)(f1 - dn) >= n
    long long excess_edges = r.f1 - (long long)d * r.n;
    r.meets_proved = 1000 * (2 * (long long)d + 1) * excess_edges >= 987 * r.n;
    r.meets_conjectured = (2 * (long long)d - 2) * excess_edges >= r.n;
    r.g2 = excess_edges + binom2(d + 1);
    r.alpha = alpha_exact(G).size;
    r.turan_size = turan_stable(G).size;
    return r;
}

} // namespace flagsphere
