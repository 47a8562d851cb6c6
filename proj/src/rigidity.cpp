#include "flagsphere/rigidity.hpp"

#include <algorithm>

#include "flagsphere/errors.hpp"

namespace flagsphere {

ModpMatrix rigidity_matrix(const Graph& G, int d, std::span<const uint64_t> coords, uint64_t p) {
    if (d < 1) throw InvalidInput("embedding dimension must be positive");
    if (coords.size() != size_t(G.n) * size_t(d)) {
        throw InvalidInput("coordinate table must have d entries per vertex");
    }
    auto edges = G.edges();
    ModpMatrix M(int(edges.size()), G.n * d, p);
    for (int e = 0; e < int(edges.size()); ++e) {
        auto [u, v] = edges[size_t(e)];
        for (int c = 0; c < d; ++c) {
            uint64_t pu = coords[size_t(u) * size_t(d) + size_t(c)] % p;
            uint64_t pv = coords[size_t(v) * size_t(d) + size_t(c)] % p;
            uint64_t diff = pu >= pv ? pu - pv : pu + p - pv;
            M.at(e, u * d + c) = diff;
            M.at(e, v * d + c) = diff == 0 ? 0 : p - diff;
        }
    }
    return M;
}

GenericRankResult generic_rank(const Graph& G, int d, uint64_t seed, int trials) {
    if (trials < 1) throw InvalidInput("need at least one trial");
    GenericRankResult res;
    res.trials = trials;
    std::vector<long long> ranks(size_t(trials), 0);
    std::vector<long double> bounds(size_t(trials), 0.0);
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t) {
        SplitMix64 rng = stream_rng(seed, 0x71a1, uint64_t(t));
        uint64_t p = random_prime_61(rng);
        std::vector<uint64_t> coords(size_t(G.n) * size_t(d));
        for (auto& c : coords) c = 1 + rng.next_below(p - 1);
        ModpMatrix M = rigidity_matrix(G, d, coords, p);
        ranks[size_t(t)] = modp_rank(std::move(M));
        // a maximal nonzero minor has degree at most its size in the
        // coordinate variables
        long long deg = std::min<long long>(G.m, (long long)G.n * d);
        bounds[size_t(t)] = (long double)deg / (long double)p;
    }
    res.fail_prob = 1.0L;
    for (int t = 0; t < trials; ++t) {
        res.rank = std::max(res.rank, ranks[size_t(t)]);
        res.fail_prob *= bounds[size_t(t)];
    }
    return res;
}

long long g2_value(const Complex& K, int d) {
    if (!K.is_pure() || K.dim() != d - 1) {
        throw DimMismatch("g2 needs a pure complex of dimension d-1");
    }
    Graph G = skeleton_graph(K);
    return (long long)G.m - (long long)d * G.n + binom2(d + 1);
}

RigidityReport rigidity_report(const Complex& K, int d, uint64_t seed, int trials, int probe_r) {
    Graph G = skeleton_graph(K);
    RigidityReport r;
    r.d = d;
    r.n = G.n;
    r.f1 = G.m;
    r.g2 = r.f1 - (long long)d * r.n + binom2(d + 1);
    r.expected_rank = (long long)d * r.n - binom2(d + 1);
    auto gr = generic_rank(G, d, seed, trials);
    r.rank = gr.rank;
    r.trials = gr.trials;
    r.fail_prob = gr.fail_prob;
    r.stress_dim = r.f1 - r.rank;
    r.generically_d_rigid = (r.rank == r.expected_rank);
    r.alpha_witness = alpha_exact(G).size;
    r.stress_ge_alpha = (r.g2 >= r.alpha_witness);
    if (probe_r > 0) {
        r.probe_r = probe_r;
        r.d_plus_1_rigid = rigidity_probe(K, probe_r, derive_seed(seed, {0x9c0be}), trials);
    }
    // (2d+1) f1 >= (2d+1) d n + 0.987 n, scaled by 1000
    r.f1_bound_observed = 1000 * (2 * d + 1) * r.f1 >= 1000 * (long long)(2 * d + 1) * d * r.n + 987 * r.n;
    return r;
}

RigidityReport stress_inequality_check(const Complex& K, int d, uint64_t seed, int trials) {
    if (d < 4) throw PreconditionFailed("stress-count check needs d >= 4");
    if (!K.is_pure() || K.dim() != d - 1) {
        throw PreconditionFailed("stress-count check needs a pure (d-1)-complex");
    }
    if (!is_flag(K)) throw PreconditionFailed("stress-count check needs a flag complex");
    return rigidity_report(K, d, seed, trials, 0);
}

bool rigidity_probe(const Complex& K, int r, uint64_t seed, int trials) {
    Graph G = skeleton_graph(K);
    long long target = (long long)r * G.n - binom2(r + 1);
    if ((long long)G.m < target) return false; // too few edges to be r-rigid
    return generic_rank(G, r, seed, trials).rank == target;
}

} // namespace flagsphere
