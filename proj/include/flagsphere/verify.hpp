#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flagsphere/complex.hpp"

namespace flagsphere {

struct PmReport {
    bool ok = false;
    std::string witness; // first violation found, empty when ok
};

// Pure complex where every (dim-1)-face lies in exactly two facets and the
// facet adjacency (dual) graph is connected. Throws NotPure on non-pure input.
PmReport is_pseudomanifold(const Complex& K);

// Ranks of mod-2 homology, beta_0 .. beta_dim, via boundary-matrix ranks
// over the two-element field.
std::vector<long long> betti_mod2(const Complex& K);

struct BistellarResult {
    bool success = false;  // reached the boundary of the (dim+1)-simplex
    Complex reduced;
    long long moves = 0;
    std::string note;
};

// Bistellar-flip reduction by simulated annealing on the lexicographic
// f-vector. Deterministic given the seed. Throws PreconditionFailed if K is
// not a pseudomanifold.
BistellarResult bistellar_reduce(const Complex& K, int max_rounds = 10000, uint64_t seed = 0);

enum class SphereVerdict { CertifiedSphere, HomologySphere, NotSphere };

struct SphereCert {
    SphereVerdict verdict = SphereVerdict::NotSphere;
    std::string reason;
    std::vector<long long> betti;
    std::string link_summary;  // e.g. "38/38 links certified"
    long long flip_trace_len = 0;
};

struct VerifyOptions {
    uint64_t seed = 0;
    int max_rounds = 10000;
    int restarts = 5;
    // Total work cap across the link recursion; when exhausted the verdict
    // degrades to HomologySphere rather than running forever.
    long long work_budget = 2000;
};

// Certification pipeline: purity, pseudomanifold, Euler/Betti, recursive
// vertex-link verification, then a dimension dispatch (cycle test for dim 1,
// surface classification for dim 2, bistellar reduction for dim >= 3).
SphereCert verify_sphere(const Complex& K, const VerifyOptions& opt = {});

const char* verdict_name(SphereVerdict v);

} // namespace flagsphere
