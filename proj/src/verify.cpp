#include "flagsphere/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "flagsphere/errors.hpp"
#include "flagsphere/kernels/gf2_rank.hpp"
#include "flagsphere/rng.hpp"

namespace flagsphere {

namespace {

struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ULL;
        for (int x : v) {
            h ^= size_t(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

std::string face_text(const Complex& K, const std::vector<int>& f) {
    std::string out = "{";
    for (size_t i = 0; i < f.size(); ++i) {
        if (i) out += " ";
        out += K.label_of(f[i]);
    }
    return out + "}";
}

struct DSU {
    std::vector<int> parent;
    explicit DSU(int n) : parent(size_t(n)) {
        for (int i = 0; i < n; ++i) parent[size_t(i)] = i;
    }
    int find(int x) {
        while (parent[size_t(x)] != x) x = parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
        return x;
    }
    void unite(int a, int b) { parent[size_t(find(a))] = find(b); }
};

} // namespace

PmReport is_pseudomanifold(const Complex& K) {
    if (!K.is_pure()) throw NotPure("pseudomanifold check needs a pure complex");
    if (K.facets.empty()) return {false, "empty complex"};
    int fsz = int(K.facets.front().size());
    if (fsz == 1) {
        // dim 0: no ridges; dual connectivity is vacuous per facet pair
        return {true, ""};
    }
    std::unordered_map<std::vector<int>, std::vector<int>, VecHash> ridge_facets;
    for (int fi = 0; fi < int(K.facets.size()); ++fi) {
        const auto& f = K.facets[size_t(fi)];
        for (size_t drop = 0; drop < f.size(); ++drop) {
            std::vector<int> ridge;
            for (size_t i = 0; i < f.size(); ++i) {
                if (i != drop) ridge.push_back(f[i]);
            }
            ridge_facets[ridge].push_back(fi);
        }
    }
    DSU dsu(int(K.facets.size()));
    for (const auto& [ridge, fs] : ridge_facets) {
        if (fs.size() != 2) {
            return {false, "ridge " + face_text(K, ridge) + " lies in " + std::to_string(fs.size()) +
                               " facets"};
        }
        dsu.unite(fs[0], fs[1]);
    }
    int root = dsu.find(0);
    for (int fi = 1; fi < int(K.facets.size()); ++fi) {
        if (dsu.find(fi) != root) return {false, "dual graph disconnected"};
    }
    return {true, ""};
}

std::vector<long long> betti_mod2(const Complex& K) {
    auto faces = faces_by_dim(K);
    int D = int(faces.size()) - 1;
    if (D < 0) return {};
    // rank of each boundary map d_k : C_k -> C_{k-1}
    std::vector<int> rank(size_t(D + 2), 0);
    for (int k = 1; k <= D; ++k) {
        std::unordered_map<std::vector<int>, int, VecHash> ridge_index;
        for (int i = 0; i < int(faces[size_t(k - 1)].size()); ++i) {
            ridge_index[faces[size_t(k - 1)][size_t(i)]] = i;
        }
        Gf2Matrix M(int(faces[size_t(k)].size()), int(faces[size_t(k - 1)].size()));
        for (int r = 0; r < int(faces[size_t(k)].size()); ++r) {
            const auto& f = faces[size_t(k)][size_t(r)];
            for (size_t drop = 0; drop < f.size(); ++drop) {
                std::vector<int> ridge;
                for (size_t i = 0; i < f.size(); ++i) {
                    if (i != drop) ridge.push_back(f[i]);
                }
                M.set(r, ridge_index.at(ridge));
            }
        }
        rank[size_t(k)] = gf2_rank(std::move(M));
    }
    std::vector<long long> betti(size_t(D + 1), 0);
    for (int k = 0; k <= D; ++k) {
        betti[size_t(k)] = (long long)faces[size_t(k)].size() - rank[size_t(k)] - rank[size_t(k + 1)];
    }
    return betti;
}

// ---------------------------------------------------------------------------
// Bistellar flips
// ---------------------------------------------------------------------------

namespace {

// A flip replaces star(F) = F * boundary(A) by boundary(F) * A, where
// |F| + |A| = dim + 2. It is legal when link(F) is exactly the boundary of
// the simplex on A and A itself is not a face.
struct Move {
    std::vector<int> face;
    std::vector<int> coface;
};

struct FlipState {
    int D; // dimension
    std::set<std::vector<int>> facets;
    // every proper nonempty sub-face -> facets containing it
    std::unordered_map<std::vector<int>, std::vector<std::vector<int>>, VecHash> cofacets;

    explicit FlipState(const Complex& K) : D(K.dim()) {
        for (const auto& f : K.facets) insert_facet(f);
    }

    void insert_facet(const std::vector<int>& f) {
        facets.insert(f);
        for_proper_subsets(f, [&](const std::vector<int>& s) { cofacets[s].push_back(f); });
    }

    void remove_facet(const std::vector<int>& f) {
        facets.erase(f);
        for_proper_subsets(f, [&](const std::vector<int>& s) {
            auto it = cofacets.find(s);
            auto& list = it->second;
            list.erase(std::find(list.begin(), list.end(), f));
            if (list.empty()) cofacets.erase(it);
        });
    }

    template <typename Fn>
    static void for_proper_subsets(const std::vector<int>& f, Fn&& fn) {
        int s = int(f.size());
        std::vector<int> sub;
        for (unsigned mask = 1; mask + 1 < (1u << s); ++mask) {
            sub.clear();
            for (int b = 0; b < s; ++b) {
                if (mask & (1u << b)) sub.push_back(f[size_t(b)]);
            }
            fn(sub);
        }
    }

    bool is_face(const std::vector<int>& f) const {
        return cofacets.count(f) || facets.count(f);
    }

    std::vector<long long> f_vec() const {
        std::vector<long long> fv(size_t(D + 1), 0);
        for (const auto& [face, _] : cofacets) ++fv[face.size() - 1];
        for (const auto& f : facets) ++fv[f.size() - 1];
        return fv;
    }

    bool is_simplex_boundary() const {
        std::set<int> verts;
        for (const auto& f : facets) verts.insert(f.begin(), f.end());
        return int(verts.size()) == D + 2 && int(facets.size()) == D + 2;
    }

    // Legal moves grouped by |F| (1..D).
    void collect_moves(std::vector<std::vector<Move>>& by_size) const {
        by_size.assign(size_t(D + 1), {});
        for (const auto& [F, cof] : cofacets) {
            size_t need = size_t(D + 2) - F.size(); // |A|
            if (F.size() > size_t(D) || cof.size() != need) continue;
            // A = union of the complements; legal when the complements are
            // exactly the (|A|-1)-subsets of A and A is not a face.
            std::set<int> a_set;
            for (const auto& f : cof) {
                for (int v : f) {
                    if (!std::binary_search(F.begin(), F.end(), v)) a_set.insert(v);
                }
            }
            if (a_set.size() != need) continue;
            std::vector<int> A(a_set.begin(), a_set.end());
            if (is_face(A)) continue;
            std::set<std::vector<int>> complements;
            bool ok = true;
            for (const auto& f : cof) {
                std::vector<int> c;
                for (int v : f) {
                    if (!std::binary_search(F.begin(), F.end(), v)) c.push_back(v);
                }
                if (c.size() != need - 1 || !std::includes(A.begin(), A.end(), c.begin(), c.end())) {
                    ok = false;
                    break;
                }
                complements.insert(c);
            }
            if (!ok || complements.size() != need) continue;
            by_size[F.size()].push_back(Move{F, A});
        }
    }

    void apply(const Move& mv) {
        const auto& F = mv.face;
        const auto& A = mv.coface;
        for (int a : A) {
            std::vector<int> gone;
            for (int v : A) {
                if (v != a) gone.push_back(v);
            }
            gone.insert(gone.end(), F.begin(), F.end());
            std::sort(gone.begin(), gone.end());
            remove_facet(gone);
        }
        for (int f : F) {
            std::vector<int> fresh;
            for (int v : F) {
                if (v != f) fresh.push_back(v);
            }
            fresh.insert(fresh.end(), A.begin(), A.end());
            std::sort(fresh.begin(), fresh.end());
            insert_facet(fresh);
        }
    }
};

} // namespace

BistellarResult bistellar_reduce(const Complex& K, int max_rounds, uint64_t seed) {
    PmReport pm = is_pseudomanifold(K);
    if (!pm.ok) throw PreconditionFailed("bistellar reduction needs a pseudomanifold: " + pm.witness);

    BistellarResult res;
    int D = K.dim();
    if (D < 1) {
        res.success = K.facets.size() == 2; // S^0
        res.reduced = K;
        return res;
    }

    FlipState st(K);
    SplitMix64 rng = stream_rng(seed, 0xb157e11a);
    int stuck = 0;
    std::vector<std::vector<Move>> by_size;

    for (int round = 0; round < max_rounds; ++round) {
        if (st.is_simplex_boundary()) {
            res.success = true;
            break;
        }
        st.collect_moves(by_size);
        // strictly decreasing moves have |F| < |A|, i.e. |F| < (D+2)/2
        const Move* chosen = nullptr;
        for (size_t s = 1; 2 * s < size_t(D + 2); ++s) {
            if (!by_size[s].empty()) {
                chosen = &by_size[s][rng.next_below(by_size[s].size())];
                break;
            }
        }
        if (chosen) {
            stuck = 0;
            st.apply(*chosen);
            ++res.moves;
            continue;
        }
        // stuck in a local minimum: heat with neutral or mildly increasing
        // moves, more of them the longer the drought lasts
        ++stuck;
        int burst = 1 + std::min(stuck, 8);
        bool moved = false;
        for (int b = 0; b < burst; ++b) {
            st.collect_moves(by_size);
            std::vector<const Move*> options;
            for (size_t s = (size_t(D) + 2) / 2; s <= size_t(D); ++s) {
                for (const auto& mv : by_size[s]) options.push_back(&mv);
                if (!options.empty()) break;
            }
            if (options.empty()) break;
            st.apply(*options[rng.next_below(options.size())]);
            ++res.moves;
            moved = true;
        }
        if (!moved) {
            res.note = "no legal moves";
            break;
        }
    }
    if (!res.success && st.is_simplex_boundary()) res.success = true;

    std::map<int, std::string> labels = K.labels;
    for (const auto& f : st.facets) {
        for (int v : f) {
            if (!labels.count(v)) labels.emplace(v, "t_" + std::to_string(v));
        }
    }
    res.reduced = make_complex(std::vector<std::vector<int>>(st.facets.begin(), st.facets.end()), labels);
    return res;
}

// ---------------------------------------------------------------------------
// Sphere certification
// ---------------------------------------------------------------------------

namespace {

SphereCert certify(const Complex& K, const VerifyOptions& opt, long long& budget);

SphereCert not_sphere(std::string reason) {
    SphereCert c;
    c.verdict = SphereVerdict::NotSphere;
    c.reason = std::move(reason);
    return c;
}

SphereCert certify(const Complex& K, const VerifyOptions& opt, long long& budget) {
    SphereCert cert;
    if (K.facets.empty()) return not_sphere("empty complex");
    int D = K.dim();

    if (D == 0) {
        if (K.facets.size() == 2 && K.is_pure()) {
            cert.verdict = SphereVerdict::CertifiedSphere;
            cert.reason = "two points";
            cert.betti = betti_mod2(K);
            return cert;
        }
        return not_sphere("dimension 0 but not exactly two points");
    }

    if (!K.is_pure()) {
        std::size_t lo = K.facets.front().size(), hi = lo;
        for (const auto& f : K.facets) {
            lo = std::min(lo, f.size());
            hi = std::max(hi, f.size());
        }
        return not_sphere("not pure: facet sizes range from " + std::to_string(lo - 1) + " to " +
                          std::to_string(hi - 1) + " dimensional");
    }

    PmReport pm = is_pseudomanifold(K);
    if (!pm.ok) return not_sphere("not a pseudomanifold: " + pm.witness);

    cert.betti = betti_mod2(K);
    std::vector<long long> want(size_t(D + 1), 0);
    want.front() = 1;
    want.back() = 1;
    if (cert.betti != want) {
        std::ostringstream why;
        why << "mod-2 Betti vector (";
        for (size_t i = 0; i < cert.betti.size(); ++i) why << (i ? "," : "") << cert.betti[i];
        why << ") is not that of a sphere";
        auto c = not_sphere(why.str());
        c.betti = cert.betti;
        return c;
    }
    long long chi = euler_characteristic(K);
    long long chi_want = 1 + ((D % 2 == 0) ? 1 : -1);
    if (chi != chi_want) return not_sphere("Euler characteristic " + std::to_string(chi));

    if (D == 1) {
        // pure pseudomanifold of dim 1 with sphere homology: a single cycle
        cert.verdict = SphereVerdict::CertifiedSphere;
        cert.reason = "cycle";
        return cert;
    }

    // recursive vertex-link verification
    int certified = 0, homology_only = 0;
    std::vector<int> ids = K.vertex_ids();
    for (int v : ids) {
        if (budget-- <= 0) {
            cert.verdict = SphereVerdict::HomologySphere;
            cert.reason = "work budget exhausted during link verification";
            cert.link_summary = std::to_string(certified) + "/" + std::to_string(ids.size()) +
                                " links certified before budget ran out";
            return cert;
        }
        SphereCert lc = certify(link(K, {v}), opt, budget);
        if (lc.verdict == SphereVerdict::NotSphere) {
            return not_sphere("link of " + K.label_of(v) + " is not a sphere: " + lc.reason);
        }
        if (lc.verdict == SphereVerdict::CertifiedSphere) ++certified;
        else ++homology_only;
    }
    cert.link_summary =
        std::to_string(certified) + "/" + std::to_string(ids.size()) + " links certified";

    if (D == 2) {
        // closed connected surface with chi = 2: classification gives S^2
        cert.verdict = homology_only == 0 ? SphereVerdict::CertifiedSphere : SphereVerdict::HomologySphere;
        cert.reason = homology_only == 0 ? "surface classification" : "some links only homology-certified";
        return cert;
    }

    bool reduced = false;
    long long trace = 0;
    for (int attempt = 0; attempt < opt.restarts && !reduced; ++attempt) {
        if (budget <= 0) break;
        BistellarResult br =
            bistellar_reduce(K, opt.max_rounds, derive_seed(opt.seed, {0x5b, uint64_t(attempt)}));
        trace += br.moves;
        budget -= 1 + br.moves / 64;
        reduced = br.success;
    }
    cert.flip_trace_len = trace;
    if (reduced && homology_only == 0) {
        cert.verdict = SphereVerdict::CertifiedSphere;
        cert.reason = "bistellar reduction reached the simplex boundary";
    } else {
        cert.verdict = SphereVerdict::HomologySphere;
        cert.reason = reduced ? "some links only homology-certified"
                              : "bistellar reduction inconclusive";
    }
    return cert;
}

} // namespace

SphereCert verify_sphere(const Complex& K, const VerifyOptions& opt) {
    long long budget = opt.work_budget;
    return certify(K, opt, budget);
}

const char* verdict_name(SphereVerdict v) {
    switch (v) {
        case SphereVerdict::CertifiedSphere: return "CertifiedSphere";
        case SphereVerdict::HomologySphere: return "HomologySphere";
        case SphereVerdict::NotSphere: return "NotSphere";
    }
    return "?";
}

} // namespace flagsphere
