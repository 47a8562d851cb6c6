#pragma once

#include <map>
#include <string>
#include <vector>

#include "flagsphere/graph.hpp"

namespace flagsphere {

// A simplicial complex stored by its inclusion-maximal faces. Vertex ids are
// integers; every id appearing in a facet has a label, and labels are unique
// within a complex. Facets are kept sorted (both inside each facet and as a
// list), so equality of facet sets is plain container equality.
struct Complex {
    std::vector<std::vector<int>> facets; // each sorted ascending; list sorted lex
    std::map<int, std::string> labels;    // ids used by facets -> label

    int dim() const;                      // max facet cardinality - 1; -1 if empty
    bool is_pure() const;                 // all facets of equal cardinality
    int num_vertices() const { return int(labels.size()); }
    std::vector<int> vertex_ids() const;  // sorted

    const std::string& label_of(int id) const;
    int id_of(const std::string& label) const; // -1 if absent

    bool has_face(std::vector<int> face) const; // face given in any order

    // Canonical representation independent of id assignment.
    std::vector<std::vector<std::string>> facet_labels() const;
};

// Counts of faces by dimension, with the empty face first: counts[0] = 1,
// counts[k+1] = number of k-faces.
struct FVector {
    std::vector<long long> counts;

    long long f(int k) const { return counts.at(size_t(k + 1)); }
    int dim() const { return int(counts.size()) - 2; }
    bool operator==(const FVector&) const = default;
};

// Normalizes raw facet data into a Complex: sorts, drops non-maximal facets,
// restricts the label table to used ids, and checks label uniqueness.
Complex make_complex(std::vector<std::vector<int>> facets, const std::map<int, std::string>& labels);

// Builds a complex from facets given as label lists; ids are assigned by
// first appearance. Empty input or an empty facet is InvalidInput.
Complex from_facets(const std::vector<std::vector<std::string>>& facet_list);

// All faces grouped by dimension: result[k] = sorted list of k-faces.
std::vector<std::vector<std::vector<int>>> faces_by_dim(const Complex& K);

FVector f_vector(const Complex& K);

long long euler_characteristic(const Complex& K);

// The 1-skeleton as a Graph; graph vertex i is the i-th smallest vertex id
// of K and carries its label.
Graph skeleton_graph(const Complex& K);

// Facets are the inclusion-maximal cliques of G.
Complex clique_complex(const Graph& G);

// K equals the clique complex of its own 1-skeleton.
bool is_flag(const Complex& K);

// link(K, F) = { G : G disjoint from F, G union F in K }, with ids and labels
// inherited from K. F must be a face.
Complex link(const Complex& K, const std::vector<int>& face);
Complex link_of_labels(const Complex& K, const std::vector<std::string>& face);

// Stellar subdivision at the edge {x, y}: facets containing the edge are
// replaced by the two cones over their boundary from a fresh vertex.
Complex stellar_subdivide_edge(const Complex& K, int x, int y, const std::string& new_label);
Complex stellar_subdivide_edge(const Complex& K, const std::string& x, const std::string& y,
                               const std::string& new_label);

// Stellar subdivision at a facet: the facet is replaced by the cone over its
// boundary from a fresh vertex.
Complex stellar_subdivide_facet(const Complex& K, const std::vector<int>& facet,
                                const std::string& new_label);

// Join: faces are unions of a face from each factor. Colliding labels get a
// "#L"/"#R" suffix.
Complex join_complexes(const Complex& K1, const Complex& K2);

// Join with two isolated points (non-adjacent apexes).
Complex suspension(const Complex& K, const std::string& apex_p = "p", const std::string& apex_q = "q");

// Induced subcomplex on a vertex subset: maximal among faces contained in it.
Complex induced_subcomplex(const Complex& K, const std::vector<int>& verts);

// Relabels vertex ids by a permutation of 0..n-1 applied to the sorted id
// list; used for invariance testing.
Complex relabel(const Complex& K, const std::vector<int>& perm);

} // namespace flagsphere
