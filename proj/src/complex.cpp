#include "flagsphere/complex.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "flagsphere/errors.hpp"

namespace flagsphere {

namespace {

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    // both sorted
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) { ++i; ++j; }
        else if (a[i] > b[j]) ++j;
        else return false;
    }
    return i == a.size();
}

struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ULL;
        for (int x : v) {
            h ^= size_t(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

} // namespace

int Complex::dim() const {
    int d = -1;
    for (const auto& f : facets) d = std::max(d, int(f.size()) - 1);
    return d;
}

bool Complex::is_pure() const {
    for (const auto& f : facets) {
        if (f.size() != facets.front().size()) return false;
    }
    return true;
}

std::vector<int> Complex::vertex_ids() const {
    std::vector<int> ids;
    ids.reserve(labels.size());
    for (const auto& [id, _] : labels) ids.push_back(id);
    return ids;
}

const std::string& Complex::label_of(int id) const {
    auto it = labels.find(id);
    if (it == labels.end()) throw InvalidInput("no label for vertex id " + std::to_string(id));
    return it->second;
}

int Complex::id_of(const std::string& label) const {
    for (const auto& [id, l] : labels) {
        if (l == label) return id;
    }
    return -1;
}

bool Complex::has_face(std::vector<int> face) const {
    std::sort(face.begin(), face.end());
    for (const auto& f : facets) {
        if (is_subset(face, f)) return true;
    }
    return false;
}

std::vector<std::vector<std::string>> Complex::facet_labels() const {
    std::vector<std::vector<std::string>> out;
    out.reserve(facets.size());
    for (const auto& f : facets) {
        std::vector<std::string> row;
        row.reserve(f.size());
        for (int v : f) row.push_back(label_of(v));
        std::sort(row.begin(), row.end());
        out.push_back(std::move(row));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Complex make_complex(std::vector<std::vector<int>> facets, const std::map<int, std::string>& labels) {
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.empty()) throw InvalidInput("empty facet");
    }
    // Drop non-maximal facets: larger facets first, keep those not contained
    // in an already kept one.
    std::stable_sort(facets.begin(), facets.end(), [](const auto& a, const auto& b) {
        return a.size() > b.size();
    });
    std::vector<std::vector<int>> kept;
    std::unordered_set<std::vector<int>, VecHash> seen;
    for (auto& f : facets) {
        if (seen.count(f)) continue;
        bool dominated = false;
        for (const auto& g : kept) {
            if (g.size() <= f.size()) break; // kept is size-descending; equal size can't strictly contain
            if (is_subset(f, g)) { dominated = true; break; }
        }
        if (!dominated) {
            seen.insert(f);
            kept.push_back(std::move(f));
        }
    }
    std::sort(kept.begin(), kept.end());

    Complex K;
    K.facets = std::move(kept);
    std::set<std::string> used_labels;
    for (const auto& f : K.facets) {
        for (int v : f) {
            auto it = labels.find(v);
            if (it == labels.end()) throw InvalidInput("vertex id without label: " + std::to_string(v));
            auto [_, fresh] = K.labels.insert(*it);
            (void)_;
            if (fresh && !used_labels.insert(it->second).second) {
                throw InvalidInput("duplicate vertex label: " + it->second);
            }
        }
    }
    return K;
}

Complex from_facets(const std::vector<std::vector<std::string>>& facet_list) {
    if (facet_list.empty()) throw InvalidInput("facet list is empty");
    std::unordered_map<std::string, int> id;
    std::map<int, std::string> labels;
    std::vector<std::vector<int>> facets;
    for (const auto& facet : facet_list) {
        if (facet.empty()) throw InvalidInput("empty facet");
        std::vector<int> f;
        for (const auto& lbl : facet) {
            if (lbl.empty() || lbl.find_first_of(" \t\n") != std::string::npos) {
                throw InvalidInput("bad vertex label: '" + lbl + "'");
            }
            auto it = id.find(lbl);
            if (it == id.end()) {
                int v = int(id.size());
                it = id.emplace(lbl, v).first;
                labels.emplace(v, lbl);
            }
            f.push_back(it->second);
        }
        facets.push_back(std::move(f));
    }
    return make_complex(std::move(facets), labels);
}

std::vector<std::vector<std::vector<int>>> faces_by_dim(const Complex& K) {
    int d = K.dim();
    std::vector<std::unordered_set<std::vector<int>, VecHash>> sets(size_t(std::max(d + 1, 0)));
    std::vector<int> sub;
    for (const auto& f : K.facets) {
        int s = int(f.size());
        // enumerate nonempty subsets of f
        for (unsigned mask = 1; mask < (1u << s); ++mask) {
            sub.clear();
            for (int b = 0; b < s; ++b) {
                if (mask & (1u << b)) sub.push_back(f[size_t(b)]);
            }
            sets[sub.size() - 1].insert(sub);
        }
    }
    std::vector<std::vector<std::vector<int>>> out(sets.size());
    for (size_t k = 0; k < sets.size(); ++k) {
        out[k].assign(sets[k].begin(), sets[k].end());
        std::sort(out[k].begin(), out[k].end());
    }
    return out;
}

FVector f_vector(const Complex& K) {
    auto faces = faces_by_dim(K);
    FVector fv;
    fv.counts.push_back(1);
    for (const auto& level : faces) fv.counts.push_back((long long)level.size());
    return fv;
}

long long euler_characteristic(const Complex& K) {
    FVector fv = f_vector(K);
    long long chi = 0;
    for (size_t i = 1; i < fv.counts.size(); ++i) {
        chi += (i % 2 == 1 ? 1 : -1) * fv.counts[i];
    }
    return chi;
}

Graph skeleton_graph(const Complex& K) {
    std::vector<int> ids = K.vertex_ids();
    std::unordered_map<int, int> index;
    std::vector<std::string> labels;
    for (int i = 0; i < int(ids.size()); ++i) {
        index[ids[size_t(i)]] = i;
        labels.push_back(K.label_of(ids[size_t(i)]));
    }
    Graph G(labels);
    for (const auto& f : K.facets) {
        for (size_t i = 0; i < f.size(); ++i) {
            for (size_t j = i + 1; j < f.size(); ++j) {
                G.add_edge(index[f[i]], index[f[j]]);
            }
        }
    }
    return G;
}

namespace {

// Bron-Kerbosch with pivoting over bit-packed candidate sets.
struct CliqueEnum {
    const Graph& G;
    int words;
    std::vector<std::vector<int>> out;
    std::vector<int> R;

    explicit CliqueEnum(const Graph& g) : G(g), words(g.words) {}

    static int popcount_and(const uint64_t* a, const uint64_t* b, int words) {
        int c = 0;
        for (int w = 0; w < words; ++w) c += __builtin_popcountll(a[w] & b[w]);
        return c;
    }

    void run() {
        std::vector<uint64_t> P(size_t(words), 0), X(size_t(words), 0);
        for (int v = 0; v < G.n; ++v) P[size_t(v >> 6)] |= 1ULL << (v & 63);
        expand(P, X);
    }

    void expand(std::vector<uint64_t>& P, std::vector<uint64_t>& X) {
        bool p_empty = true, x_empty = true;
        for (int w = 0; w < words; ++w) {
            if (P[size_t(w)]) p_empty = false;
            if (X[size_t(w)]) x_empty = false;
        }
        if (p_empty && x_empty) {
            out.push_back(R);
            return;
        }
        // pivot: vertex of P|X with most neighbors in P
        int pivot = -1, best = -1;
        for (int w = 0; w < words; ++w) {
            uint64_t both = P[size_t(w)] | X[size_t(w)];
            while (both) {
                int v = w * 64 + __builtin_ctzll(both);
                both &= both - 1;
                int c = popcount_and(G.row(v), P.data(), words);
                if (c > best) { best = c; pivot = v; }
            }
        }
        // candidates: P minus N(pivot)
        std::vector<int> cand;
        for (int w = 0; w < words; ++w) {
            uint64_t bits = P[size_t(w)] & ~(pivot >= 0 ? G.row(pivot)[w] : 0ULL);
            while (bits) {
                int v = w * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                cand.push_back(v);
            }
        }
        std::vector<uint64_t> P2(size_t(words), 0), X2(size_t(words), 0);
        for (int v : cand) {
            const uint64_t* nv = G.row(v);
            for (int w = 0; w < words; ++w) {
                P2[size_t(w)] = P[size_t(w)] & nv[w];
                X2[size_t(w)] = X[size_t(w)] & nv[w];
            }
            R.push_back(v);
            expand(P2, X2);
            R.pop_back();
            P[size_t(v >> 6)] &= ~(1ULL << (v & 63));
            X[size_t(v >> 6)] |= 1ULL << (v & 63);
        }
    }
};

} // namespace

Complex clique_complex(const Graph& G) {
    if (G.n == 0) throw InvalidInput("clique complex of empty graph");
    CliqueEnum ce(G);
    ce.run();
    std::map<int, std::string> labels;
    for (int v = 0; v < G.n; ++v) labels.emplace(v, G.labels[size_t(v)]);
    return make_complex(std::move(ce.out), labels);
}

bool is_flag(const Complex& K) {
    Complex cl = clique_complex(skeleton_graph(K));
    return cl.facet_labels() == K.facet_labels();
}

Complex link(const Complex& K, const std::vector<int>& face) {
    std::vector<int> F = face;
    std::sort(F.begin(), F.end());
    if (!K.has_face(F)) throw NotAFace("link: not a face of the complex");
    std::vector<std::vector<int>> facets;
    for (const auto& g : K.facets) {
        if (!is_subset(F, g)) continue;
        std::vector<int> rest;
        std::set_difference(g.begin(), g.end(), F.begin(), F.end(), std::back_inserter(rest));
        if (!rest.empty()) facets.push_back(std::move(rest));
    }
    if (facets.empty()) {
        Complex empty;
        return empty; // link of a facet
    }
    return make_complex(std::move(facets), K.labels);
}

Complex link_of_labels(const Complex& K, const std::vector<std::string>& face) {
    std::vector<int> F;
    for (const auto& lbl : face) {
        int id = K.id_of(lbl);
        if (id < 0) throw NotAFace("link: unknown label " + lbl);
        F.push_back(id);
    }
    return link(K, F);
}

namespace {

int fresh_id(const Complex& K) {
    return K.labels.empty() ? 0 : K.labels.rbegin()->first + 1;
}

void check_fresh_label(const Complex& K, const std::string& lbl) {
    if (lbl.empty() || lbl.find_first_of(" \t\n") != std::string::npos) {
        throw InvalidInput("bad vertex label: '" + lbl + "'");
    }
    if (K.id_of(lbl) >= 0) throw InvalidInput("label already used: " + lbl);
}

} // namespace

Complex stellar_subdivide_edge(const Complex& K, int x, int y, const std::string& new_label) {
    if (x == y) throw NotAFace("edge endpoints equal");
    if (!K.has_face({x, y})) throw NotAFace("not an edge of the complex");
    check_fresh_label(K, new_label);
    int v = fresh_id(K);
    std::vector<std::vector<int>> facets;
    for (const auto& f : K.facets) {
        bool has_x = std::binary_search(f.begin(), f.end(), x);
        bool has_y = std::binary_search(f.begin(), f.end(), y);
        if (has_x && has_y) {
            std::vector<int> fx, fy;
            for (int u : f) {
                if (u != x) fx.push_back(u);
                if (u != y) fy.push_back(u);
            }
            fx.push_back(v);
            fy.push_back(v);
            facets.push_back(std::move(fx));
            facets.push_back(std::move(fy));
        } else {
            facets.push_back(f);
        }
    }
    std::map<int, std::string> labels = K.labels;
    labels.emplace(v, new_label);
    return make_complex(std::move(facets), labels);
}

Complex stellar_subdivide_edge(const Complex& K, const std::string& x, const std::string& y,
                               const std::string& new_label) {
    int ix = K.id_of(x), iy = K.id_of(y);
    if (ix < 0 || iy < 0) throw NotAFace("unknown edge label");
    return stellar_subdivide_edge(K, ix, iy, new_label);
}

Complex stellar_subdivide_facet(const Complex& K, const std::vector<int>& facet,
                                const std::string& new_label) {
    std::vector<int> F = facet;
    std::sort(F.begin(), F.end());
    if (!std::binary_search(K.facets.begin(), K.facets.end(), F)) {
        throw NotAFacet("not a facet of the complex");
    }
    check_fresh_label(K, new_label);
    int v = fresh_id(K);
    std::vector<std::vector<int>> facets;
    for (const auto& f : K.facets) {
        if (f == F) {
            for (int x : F) {
                std::vector<int> g;
                for (int u : F) {
                    if (u != x) g.push_back(u);
                }
                g.push_back(v);
                facets.push_back(std::move(g));
            }
        } else {
            facets.push_back(f);
        }
    }
    std::map<int, std::string> labels = K.labels;
    labels.emplace(v, new_label);
    return make_complex(std::move(facets), labels);
}

Complex join_complexes(const Complex& K1, const Complex& K2) {
    std::set<std::string> l1, l2;
    for (const auto& [_, l] : K1.labels) l1.insert(l);
    for (const auto& [_, l] : K2.labels) l2.insert(l);
    auto renamed = [&](const std::string& l, bool left) -> std::string {
        if (l1.count(l) && l2.count(l)) return l + (left ? "#L" : "#R");
        return l;
    };
    int offset = K1.labels.empty() ? 0 : K1.labels.rbegin()->first + 1;
    std::map<int, std::string> labels;
    for (const auto& [id, l] : K1.labels) labels.emplace(id, renamed(l, true));
    for (const auto& [id, l] : K2.labels) labels.emplace(id + offset, renamed(l, false));
    std::vector<std::vector<int>> facets;
    facets.reserve(K1.facets.size() * K2.facets.size());
    for (const auto& f1 : K1.facets) {
        for (const auto& f2 : K2.facets) {
            std::vector<int> f = f1;
            for (int v : f2) f.push_back(v + offset);
            facets.push_back(std::move(f));
        }
    }
    return make_complex(std::move(facets), labels);
}

Complex suspension(const Complex& K, const std::string& apex_p, const std::string& apex_q) {
    Complex s0 = from_facets({{apex_p}, {apex_q}});
    return join_complexes(K, s0);
}

Complex induced_subcomplex(const Complex& K, const std::vector<int>& verts) {
    std::vector<int> V = verts;
    std::sort(V.begin(), V.end());
    std::vector<std::vector<int>> facets;
    for (const auto& f : K.facets) {
        std::vector<int> g;
        std::set_intersection(f.begin(), f.end(), V.begin(), V.end(), std::back_inserter(g));
        if (!g.empty()) facets.push_back(std::move(g));
    }
    if (facets.empty()) throw InvalidInput("induced subcomplex is empty");
    return make_complex(std::move(facets), K.labels);
}

Complex relabel(const Complex& K, const std::vector<int>& perm) {
    std::vector<int> ids = K.vertex_ids();
    if (perm.size() != ids.size()) throw InvalidInput("permutation size mismatch");
    std::unordered_map<int, int> to_new;
    std::map<int, std::string> labels;
    for (size_t i = 0; i < ids.size(); ++i) {
        to_new[ids[i]] = perm[i];
        labels.emplace(perm[i], K.label_of(ids[i]));
    }
    if (labels.size() != ids.size()) throw InvalidInput("permutation not injective");
    std::vector<std::vector<int>> facets;
    for (const auto& f : K.facets) {
        std::vector<int> g;
        for (int v : f) g.push_back(to_new[v]);
        facets.push_back(std::move(g));
    }
    return make_complex(std::move(facets), labels);
}

} // namespace flagsphere
