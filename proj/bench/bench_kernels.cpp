// Compares the serial reference kernels against the OpenMP ones, on random
// matrices and on matrices coming from actual instances.
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "flagsphere/complex.hpp"
#include "flagsphere/constructions.hpp"
#include "flagsphere/kernels/gf2_rank.hpp"
#include "flagsphere/kernels/modp_rank.hpp"
#include "flagsphere/rigidity.hpp"
#include "flagsphere/rng.hpp"

using namespace flagsphere;

namespace {

double now_seconds() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
#endif
}

template <typename Fn>
double time_best_of(int reps, Fn&& fn) {
    double best = 1e30;
    for (int i = 0; i < reps; ++i) {
        double t0 = now_seconds();
        fn();
        best = std::min(best, now_seconds() - t0);
    }
    return best;
}

Gf2Matrix random_gf2(int n, uint64_t seed) {
    SplitMix64 rng(seed);
    Gf2Matrix m(n, n);
    for (auto& w : m.bits) w = rng.next();
    return m;
}

ModpMatrix random_modp(int n, uint64_t seed) {
    SplitMix64 rng(seed);
    uint64_t p = random_prime_61(rng);
    ModpMatrix m(n, n, p);
    for (auto& v : m.a) v = rng.next_below(p);
    return m;
}

void report(const char* what, double serial, double parallel, long long r1, long long r2) {
    std::printf("%-34s serial %8.4fs  parallel %8.4fs  speedup %5.2fx  rank %lld%s\n", what, serial,
                parallel, serial / parallel, r1, r1 == r2 ? "" : "  RANK MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run the same code path\n");
#endif

    for (int n : {512, 1024, 2048}) {
        Gf2Matrix m = random_gf2(n, 42);
        int r1 = 0, r2 = 0;
        double ts = time_best_of(3, [&] { r1 = gf2_rank_serial(m); });
        double tp = time_best_of(3, [&] { r2 = gf2_rank(m); });
        char label[64];
        std::snprintf(label, sizeof label, "gf2 rank, random %dx%d", n, n);
        report(label, ts, tp, r1, r2);
    }

    for (int n : {256, 512}) {
        ModpMatrix m = random_modp(n, 7);
        int r1 = 0, r2 = 0;
        double ts = time_best_of(3, [&] { r1 = modp_rank_serial(m); });
        double tp = time_best_of(3, [&] { r2 = modp_rank(m); });
        char label[64];
        std::snprintf(label, sizeof label, "modp rank, random %dx%d", n, n);
        report(label, ts, tp, r1, r2);
    }

    {
        // boundary matrix of a large 2-sphere: triangles x edges over GF(2)
        Complex K = build_W(3, 120);
        auto faces = faces_by_dim(K);
        std::map<std::vector<int>, int> edge_index;
        for (int i = 0; i < int(faces[1].size()); ++i) edge_index[faces[1][size_t(i)]] = i;
        Gf2Matrix m(int(faces[2].size()), int(faces[1].size()));
        for (int r = 0; r < int(faces[2].size()); ++r) {
            const auto& f = faces[2][size_t(r)];
            for (size_t drop = 0; drop < 3; ++drop) {
                std::vector<int> e;
                for (size_t i = 0; i < 3; ++i) {
                    if (i != drop) e.push_back(f[i]);
                }
                m.set(r, edge_index.at(e));
            }
        }
        int r1 = 0, r2 = 0;
        double ts = time_best_of(3, [&] { r1 = gf2_rank_serial(m); });
        double tp = time_best_of(3, [&] { r2 = gf2_rank(m); });
        char label[64];
        std::snprintf(label, sizeof label, "gf2 boundary d2, W(3,120) %dx%d", m.rows, m.cols);
        report(label, ts, tp, r1, r2);
    }

    {
        // rigidity matrix of a polygon suspension, d = 4
        Complex K = polygon_suspension(4, 120);
        Graph G = skeleton_graph(K);
        SplitMix64 rng(3);
        uint64_t p = random_prime_61(rng);
        std::vector<uint64_t> coords(size_t(G.n) * 4);
        for (auto& c : coords) c = 1 + rng.next_below(p - 1);
        ModpMatrix m = rigidity_matrix(G, 4, coords, p);
        int r1 = 0, r2 = 0;
        double ts = time_best_of(3, [&] { r1 = modp_rank_serial(m); });
        double tp = time_best_of(3, [&] { r2 = modp_rank(m); });
        char label[64];
        std::snprintf(label, sizeof label, "modp rigidity, polysusp(4,120) %dx%d", m.rows, m.cols);
        report(label, ts, tp, r1, r2);
    }

    return 0;
}
