#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace flagsphere {

struct Complex;

// Simple undirected graph on vertices 0..n-1, bit-packed adjacency matrix.
struct Graph {
    int n = 0;
    int m = 0;
    int words = 0;
    std::vector<uint64_t> adj;
    std::vector<std::string> labels;

    Graph() = default;
    explicit Graph(std::vector<std::string> vertex_labels);
    explicit Graph(int vertices); // labels "v0".."v{n-1}"

    bool has_edge(int u, int v) const {
        return (adj[size_t(u) * words + (v >> 6)] >> (v & 63)) & 1;
    }
    void add_edge(int u, int v);
    int degree(int u) const;
    const uint64_t* row(int u) const { return adj.data() + size_t(u) * words; }

    std::vector<std::pair<int, int>> edges() const; // sorted pairs (u < v)
    int id_of(const std::string& label) const;      // -1 if absent
};

Graph induced_subgraph(const Graph& G, const std::vector<int>& verts);

// Complement on the same vertex set.
Graph complement_graph(const Graph& G);

// Join graph: disjoint union plus all cross edges. Labels suffixed on
// collision like the complex join.
Graph join_graph(const Graph& G1, const Graph& G2);

struct StableSetWitness {
    std::vector<int> vertices;        // ascending
    std::vector<std::string> labels;  // matching labels
    std::string method;               // exact | turan_greedy | link_recursive
    int size = 0;
    bool optimal = false;             // true iff proven maximum
};

bool is_stable(const Graph& G, const std::vector<int>& S);

// Exact maximum stable set by branch and bound with a greedy clique-cover
// bound. Deterministic for a fixed graph. If the budget runs out the best
// incumbent is returned with optimal = false.
StableSetWitness alpha_exact(const Graph& G,
                             std::chrono::milliseconds budget = std::chrono::milliseconds(120000));

// Greedy minimum-degree deletion; returned set has size at least
// ceil(n / (dbar + 1)) where dbar is the average degree.
StableSetWitness turan_stable(const Graph& G);

long long turan_guarantee(const Graph& G); // ceil(n^2 / (2m + n)), 0 for empty

// Recursive link-based witness for a flag (d-1)-sphere, d >= 4: descends
// into a large vertex link when one exists, otherwise picks vertices
// greedily deleting closed neighborhoods; the d = 4 base solves the planar
// link exactly. Guarantees size >= n^(1/(d-2)) / 4, asserted on return via
// integer arithmetic.
StableSetWitness link_recursive_stable(const Complex& K, int d);

} // namespace flagsphere
