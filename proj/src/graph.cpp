#include "flagsphere/graph.hpp"

#include <algorithm>
#include <set>

#include "flagsphere/complex.hpp"
#include "flagsphere/errors.hpp"

namespace flagsphere {

Graph::Graph(std::vector<std::string> vertex_labels)
    : n(int(vertex_labels.size())),
      words(n > 0 ? (n + 63) / 64 : 0),
      adj(size_t(n) * size_t(words), 0),
      labels(std::move(vertex_labels)) {
    std::set<std::string> uniq(labels.begin(), labels.end());
    if (int(uniq.size()) != n) throw InvalidInput("duplicate vertex labels in graph");
}

Graph::Graph(int vertices) {
    std::vector<std::string> l;
    l.reserve(size_t(vertices));
    for (int i = 0; i < vertices; ++i) l.push_back("v" + std::to_string(i));
    *this = Graph(std::move(l));
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidInput("edge endpoint out of range");
    if (u == v) throw InvalidInput("self-loop");
    if (has_edge(u, v)) return;
    adj[size_t(u) * words + (v >> 6)] |= 1ULL << (v & 63);
    adj[size_t(v) * words + (u >> 6)] |= 1ULL << (u & 63);
    ++m;
}

int Graph::degree(int u) const {
    int d = 0;
    for (int w = 0; w < words; ++w) d += __builtin_popcountll(row(u)[w]);
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    e.reserve(size_t(m));
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (has_edge(u, v)) e.emplace_back(u, v);
        }
    }
    return e;
}

int Graph::id_of(const std::string& label) const {
    for (int i = 0; i < n; ++i) {
        if (labels[size_t(i)] == label) return i;
    }
    return -1;
}

Graph induced_subgraph(const Graph& G, const std::vector<int>& verts) {
    std::vector<int> V = verts;
    std::sort(V.begin(), V.end());
    V.erase(std::unique(V.begin(), V.end()), V.end());
    std::vector<std::string> labels;
    for (int v : V) {
        if (v < 0 || v >= G.n) throw InvalidInput("vertex out of range");
        labels.push_back(G.labels[size_t(v)]);
    }
    Graph H(labels);
    for (size_t i = 0; i < V.size(); ++i) {
        for (size_t j = i + 1; j < V.size(); ++j) {
            if (G.has_edge(V[i], V[j])) H.add_edge(int(i), int(j));
        }
    }
    return H;
}

Graph complement_graph(const Graph& G) {
    Graph H(G.labels);
    for (int u = 0; u < G.n; ++u) {
        for (int v = u + 1; v < G.n; ++v) {
            if (!G.has_edge(u, v)) H.add_edge(u, v);
        }
    }
    return H;
}

Graph join_graph(const Graph& G1, const Graph& G2) {
    std::set<std::string> l1(G1.labels.begin(), G1.labels.end());
    std::set<std::string> l2(G2.labels.begin(), G2.labels.end());
    std::vector<std::string> labels;
    for (const auto& l : G1.labels) labels.push_back(l1.count(l) && l2.count(l) ? l + "#L" : l);
    for (const auto& l : G2.labels) labels.push_back(l1.count(l) && l2.count(l) ? l + "#R" : l);
    Graph H(labels);
    for (auto [u, v] : G1.edges()) H.add_edge(u, v);
    for (auto [u, v] : G2.edges()) H.add_edge(u + G1.n, v + G1.n);
    for (int u = 0; u < G1.n; ++u) {
        for (int v = 0; v < G2.n; ++v) H.add_edge(u, v + G1.n);
    }
    return H;
}

bool is_stable(const Graph& G, const std::vector<int>& S) {
    for (int v : S) {
        if (v < 0 || v >= G.n) throw InvalidInput("vertex out of range");
    }
    for (size_t i = 0; i < S.size(); ++i) {
        for (size_t j = i + 1; j < S.size(); ++j) {
            if (S[i] == S[j]) throw InvalidInput("repeated vertex in set");
            if (G.has_edge(S[i], S[j])) return false;
        }
    }
    return true;
}

namespace {

using Bits = std::vector<uint64_t>;

int popcount(const Bits& b) {
    int c = 0;
    for (uint64_t w : b) c += __builtin_popcountll(w);
    return c;
}

bool test_bit(const Bits& b, int v) { return (b[size_t(v >> 6)] >> (v & 63)) & 1; }
void clear_bit(Bits& b, int v) { b[size_t(v >> 6)] &= ~(1ULL << (v & 63)); }

struct MisSolver {
    const Graph& G;
    int words;
    std::vector<int> best;
    std::vector<int> cur;
    std::chrono::steady_clock::time_point deadline;
    bool timed_out = false;
    long long nodes = 0;

    MisSolver(const Graph& g, std::chrono::steady_clock::time_point dl) : G(g), words(g.words), deadline(dl) {}

    int deg_in(const Bits& P, int v) const {
        int c = 0;
        const uint64_t* nv = G.row(v);
        for (int w = 0; w < words; ++w) c += __builtin_popcountll(nv[w] & P[size_t(w)]);
        return c;
    }

    // Greedy clique cover of P; the number of classes bounds any stable
    // subset of P.
    int cover_bound(const Bits& P) const {
        std::vector<Bits> classes;
        for (int w = 0; w < words; ++w) {
            uint64_t bits = P[size_t(w)];
            while (bits) {
                int v = w * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                const uint64_t* nv = G.row(v);
                bool placed = false;
                for (auto& cls : classes) {
                    bool fits = true;
                    for (int x = 0; x < words; ++x) {
                        if (cls[size_t(x)] & ~nv[x]) { fits = false; break; }
                    }
                    if (fits) {
                        cls[size_t(v >> 6)] |= 1ULL << (v & 63);
                        placed = true;
                        break;
                    }
                }
                if (!placed) {
                    Bits cls(size_t(words), 0);
                    cls[size_t(v >> 6)] |= 1ULL << (v & 63);
                    classes.push_back(std::move(cls));
                }
            }
        }
        return int(classes.size());
    }

    void search(Bits P) {
        if (timed_out) return;
        if ((++nodes & 1023) == 0 && std::chrono::steady_clock::now() > deadline) {
            timed_out = true;
            return;
        }
        // Safe reductions: vertices of degree <= 1 inside P can always be
        // taken.
        size_t pushed = 0;
        for (;;) {
            int pick = -1;
            for (int w = 0; w < words && pick < 0; ++w) {
                uint64_t bits = P[size_t(w)];
                while (bits) {
                    int v = w * 64 + __builtin_ctzll(bits);
                    bits &= bits - 1;
                    if (deg_in(P, v) <= 1) { pick = v; break; }
                }
            }
            if (pick < 0) break;
            cur.push_back(pick);
            ++pushed;
            const uint64_t* nv = G.row(pick);
            clear_bit(P, pick);
            for (int w = 0; w < words; ++w) P[size_t(w)] &= ~nv[w];
        }
        int remaining = popcount(P);
        if (remaining == 0) {
            if (cur.size() > best.size()) best = cur;
        } else if (cur.size() + size_t(remaining) > best.size() &&
                   cur.size() + size_t(cover_bound(P)) > best.size()) {
            // branch on the max-degree vertex inside P, ties by smallest id
            int v = -1, vd = -1;
            for (int w = 0; w < words; ++w) {
                uint64_t bits = P[size_t(w)];
                while (bits) {
                    int u = w * 64 + __builtin_ctzll(bits);
                    bits &= bits - 1;
                    int d = deg_in(P, u);
                    if (d > vd) { vd = d; v = u; }
                }
            }
            Bits P1 = P;
            clear_bit(P1, v);
            const uint64_t* nv = G.row(v);
            for (int w = 0; w < words; ++w) P1[size_t(w)] &= ~nv[w];
            cur.push_back(v);
            search(std::move(P1));
            cur.pop_back();

            Bits P2 = std::move(P);
            clear_bit(P2, v);
            search(std::move(P2));
        }
        while (pushed--) cur.pop_back();
    }
};

StableSetWitness make_witness(const Graph& G, std::vector<int> verts, const std::string& method,
                              bool optimal) {
    std::sort(verts.begin(), verts.end());
    StableSetWitness w;
    w.vertices = std::move(verts);
    for (int v : w.vertices) w.labels.push_back(G.labels[size_t(v)]);
    w.method = method;
    w.size = int(w.vertices.size());
    w.optimal = optimal;
    return w;
}

} // namespace

StableSetWitness alpha_exact(const Graph& G, std::chrono::milliseconds budget) {
    if (G.n > 2000) throw InvalidInput("graph too large for the exact solver (n > 2000)");
    if (G.n == 0) return make_witness(G, {}, "exact", true);
    MisSolver solver(G, std::chrono::steady_clock::now() + budget);
    solver.best = turan_stable(G).vertices; // initial incumbent
    Bits P(size_t(G.words), 0);
    for (int v = 0; v < G.n; ++v) P[size_t(v >> 6)] |= 1ULL << (v & 63);
    solver.search(std::move(P));
    auto w = make_witness(G, solver.best, "exact", !solver.timed_out);
    return w;
}

StableSetWitness turan_stable(const Graph& G) {
    Bits alive(size_t(std::max(G.words, 1)), 0);
    for (int v = 0; v < G.n; ++v) alive[size_t(v >> 6)] |= 1ULL << (v & 63);
    std::vector<int> I;
    int left = G.n;
    while (left > 0) {
        int pick = -1, pd = -1;
        for (int w = 0; w < G.words; ++w) {
            uint64_t bits = alive[size_t(w)];
            while (bits) {
                int v = w * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                int d = 0;
                const uint64_t* nv = G.row(v);
                for (int x = 0; x < G.words; ++x) d += __builtin_popcountll(nv[x] & alive[size_t(x)]);
                if (pick < 0 || d < pd) { pick = v; pd = d; }
            }
        }
        I.push_back(pick);
        const uint64_t* nv = G.row(pick);
        clear_bit(alive, pick);
        --left;
        for (int w = 0; w < G.words; ++w) {
            uint64_t gone = alive[size_t(w)] & nv[w];
            left -= __builtin_popcountll(gone);
            alive[size_t(w)] &= ~nv[w];
        }
    }
    auto w = make_witness(G, std::move(I), "turan_greedy", false);
    return w;
}

long long turan_guarantee(const Graph& G) {
    if (G.n == 0) return 0;
    long long n = G.n, m = G.m;
    return (n * n + 2 * m + n - 1) / (2 * m + n);
}

namespace {

// (4s)^(d-2) >= n, evaluated in integer arithmetic
bool quarter_root_bound_holds(long long s, long long n, int d) {
    unsigned __int128 lhs = 1;
    for (int i = 0; i < d - 2; ++i) {
        lhs *= (unsigned __int128)(4 * s);
        if (lhs > (unsigned __int128)1 << 100) return true;
    }
    return lhs >= (unsigned __int128)n;
}

// deg^(d-2) >= n^(d-3), the "large link" test
bool link_is_large(long long deg, long long n, int d) {
    unsigned __int128 lhs = 1, rhs = 1;
    for (int i = 0; i < d - 2; ++i) lhs *= (unsigned __int128)deg;
    for (int i = 0; i < d - 3; ++i) rhs *= (unsigned __int128)n;
    return lhs >= rhs;
}

std::vector<std::string> greedy_closed_neighborhood(const Graph& G) {
    // minimum-degree-first, deleting closed neighborhoods
    std::vector<std::string> out;
    for (int v : turan_stable(G).vertices) out.push_back(G.labels[size_t(v)]);
    return out;
}

std::vector<std::string> link_recursive_labels(const Complex& K, int d) {
    if (K.dim() != d - 1) throw PreconditionFailed("complex dimension does not match d");
    if (!K.is_pure()) throw PreconditionFailed("complex is not pure");
    if (!is_flag(K)) throw PreconditionFailed("complex is not flag");
    Graph G = skeleton_graph(K);
    long long n = G.n;

    int v = -1, vd = -1;
    for (int u = 0; u < G.n; ++u) {
        int du = G.degree(u);
        if (du > vd) { vd = du; v = u; }
    }

    if (d == 4) {
        if (vd >= 2 && (long long)vd * vd >= n) {
            // planar link: exact solve stands in for the quarter bound
            std::vector<int> nb;
            for (int u = 0; u < G.n; ++u) {
                if (G.has_edge(v, u)) nb.push_back(u);
            }
            Graph H = induced_subgraph(G, nb);
            auto w = alpha_exact(H);
            std::vector<std::string> out = w.labels;
            return out;
        }
        return greedy_closed_neighborhood(G);
    }

    if (link_is_large(vd, n, d)) {
        std::vector<int> ids = K.vertex_ids();
        Complex L = link(K, {ids[size_t(v)]});
        return link_recursive_labels(L, d - 1);
    }
    return greedy_closed_neighborhood(G);
}

} // namespace

StableSetWitness link_recursive_stable(const Complex& K, int d) {
    if (d < 4) throw PreconditionFailed("link-recursive witness needs d >= 4");
    std::vector<std::string> labels = link_recursive_labels(K, d);
    Graph G = skeleton_graph(K);
    std::vector<int> verts;
    for (const auto& l : labels) {
        int id = G.id_of(l);
        if (id < 0) throw PreconditionFailed("witness label missing from skeleton");
        verts.push_back(id);
    }
    auto w = make_witness(G, std::move(verts), "link_recursive", false);
    if (!is_stable(G, w.vertices)) throw PreconditionFailed("link-recursive witness not stable");
    if (!quarter_root_bound_holds(w.size, G.n, d)) {
        throw PreconditionFailed("link-recursive witness misses the quarter-root guarantee");
    }
    return w;
}

} // namespace flagsphere
