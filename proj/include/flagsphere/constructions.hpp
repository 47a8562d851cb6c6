#pragma once

#include <map>
#include <optional>
#include <string>

#include "flagsphere/complex.hpp"

namespace flagsphere {

enum class Family {
    W,                    // cl(W_{d,k})
    X,                    // cl(W_{d,k}) with edges a-y_1^1 .. a-y_j^1 subdivided
    Y,                    // X(d,k,d-1) with edges b-y_1^k .. b-y_j^k subdivided
    W4prime,              // W_{4,k} plus prism diagonals, clique complex
    X4prime,              // X(4,k,j) graph plus prism diagonals, clique complex
    Y4prime,              // Y(4,k,j) graph plus prism diagonals, clique complex
    Crosspolytope,        // boundary of the d-dimensional crosspolytope
    PolygonSuspension,    // (d-2)-fold suspension over an (n-2(d-2))-gon
    JoinUpper,            // join of 3-sphere family members plus suspensions
    CyclicBoundary,       // boundary of the cyclic d-polytope on m vertices
    NeighborlySubdivided, // cyclic boundary with every facet subdivided
};

struct ConstructionSpec {
    Family family;
    std::map<std::string, long long> params; // among d, k, j, m, n

    long long param(const std::string& name) const;
    std::string to_string() const;  // canonical CLI form, e.g. "W:d=3,k=3"
    std::string file_stem() const;  // e.g. "W_d3_k3"
};

ConstructionSpec parse_spec(const std::string& text); // throws InvalidSpec

// The W_{d,k} graph itself (not its clique complex).
Graph build_W_graph(int d, int k);

Complex build_W(int d, int k);
Complex build_X(int d, int k, int j);
Complex build_Y(int d, int k, int j);
Complex build_W4_prime(int k);
Complex build_X4_prime(int k, int j);
Complex build_Y4_prime(int k, int j);
Complex crosspolytope(int d);
Complex polygon_suspension(int d, int n);
Complex join_upper_family(int d, int n);
Complex cyclic_boundary(int d, int m);
Complex neighborly_subdivided(int d, int m);

Complex build(const ConstructionSpec& spec);

// Closed-form maximum-stable-set size where one is known for the family.
std::optional<long long> expected_alpha(const ConstructionSpec& spec);

// A flag-sphere witness spec with exactly n vertices: X/Y families for d = 3,
// the primed families for d = 4, the join construction for d >= 5, and the
// X(2,k,j) cycles for d = 2. Throws InvalidSpec when n is not realizable.
ConstructionSpec find_alpha_witness_spec(int d, long long n);

// Component sizes chosen by the join construction (3-sphere sizes, then the
// number of extra suspensions).
std::pair<std::vector<long long>, int> join_upper_split(int d, long long n);

} // namespace flagsphere
