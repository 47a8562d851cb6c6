#include "flagsphere/constructions.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "flagsphere/errors.hpp"

namespace flagsphere {

namespace {

std::string sub_label(const std::string& base, int s, int layer) {
    // paper-style names: y_2^3, z_1^1
    return base + "_" + std::to_string(s) + "^" + std::to_string(layer);
}

void check_W_params(int d, int k) {
    if (d < 2) throw InvalidSpec("W family needs d >= 2");
    if (k < 1) throw InvalidSpec("W family needs k >= 1");
}

} // namespace

Graph build_W_graph(int d, int k) {
    check_W_params(d, k);
    const int per_layer = 2 * (d - 1);
    std::vector<std::string> labels = {"a", "b"};
    for (int i = 1; i <= k; ++i) {
        for (int s = 1; s <= d - 1; ++s) labels.push_back(sub_label("y", s, i));
        for (int s = 1; s <= d - 1; ++s) labels.push_back(sub_label("z", s, i));
    }
    Graph G(labels);
    auto y = [&](int s, int i) { return 2 + (i - 1) * per_layer + (s - 1); };
    auto z = [&](int s, int i) { return 2 + (i - 1) * per_layer + (d - 1) + (s - 1); };

    for (int s = 1; s <= d - 1; ++s) {
        G.add_edge(0, y(s, 1));
        G.add_edge(0, z(s, 1));
        G.add_edge(1, y(s, k));
        G.add_edge(1, z(s, k));
    }
    // inside each layer: complete minus the antipodal matching y_s z_s
    for (int i = 1; i <= k; ++i) {
        for (int s = 1; s <= d - 1; ++s) {
            for (int t = s + 1; t <= d - 1; ++t) {
                G.add_edge(y(s, i), y(t, i));
                G.add_edge(z(s, i), z(t, i));
                G.add_edge(y(s, i), z(t, i));
                G.add_edge(z(s, i), y(t, i));
            }
        }
    }
    // consecutive layers: the pair (y_s^i z_s^i, y_t^{i+1} z_t^{i+1}) is
    // positive when t >= s and negative when t < s
    for (int i = 1; i <= k - 1; ++i) {
        for (int s = 1; s <= d - 1; ++s) {
            for (int t = 1; t <= d - 1; ++t) {
                if (t >= s) {
                    G.add_edge(y(s, i), y(t, i + 1));
                    G.add_edge(z(s, i), z(t, i + 1));
                } else {
                    G.add_edge(y(s, i), z(t, i + 1));
                    G.add_edge(z(s, i), y(t, i + 1));
                }
            }
        }
    }
    return G;
}

Complex build_W(int d, int k) { return clique_complex(build_W_graph(d, k)); }

Complex build_X(int d, int k, int j) {
    check_W_params(d, k);
    if (j < 0 || j > d - 1) throw InvalidSpec("X family needs 0 <= j <= d-1");
    Complex C = build_W(d, k);
    for (int s = 1; s <= j; ++s) {
        C = stellar_subdivide_edge(C, "a", sub_label("y", s, 1), "u_" + std::to_string(s));
    }
    return C;
}

Complex build_Y(int d, int k, int j) {
    if (d < 3) throw InvalidSpec("Y family needs d >= 3");
    if (k < 1) throw InvalidSpec("Y family needs k >= 1");
    if (j < 1 || j > d - 1) throw InvalidSpec("Y family needs 1 <= j <= d-1");
    Complex C = build_X(d, k, d - 1);
    for (int s = 1; s <= j; ++s) {
        C = stellar_subdivide_edge(C, "b", sub_label("y", s, k), "w_" + std::to_string(s));
    }
    return C;
}

namespace {

// The two prism diagonals per consecutive layer pair: y_1^i z_2^{i+1} in the
// prism over y_1 z_2 y_3, and z_1^i y_2^{i+1} in its antipodal prism.
void add_prism_diagonals(Graph& G, int k) {
    for (int i = 1; i <= k - 1; ++i) {
        int y1i = G.id_of(sub_label("y", 1, i));
        int z2i1 = G.id_of(sub_label("z", 2, i + 1));
        int z1i = G.id_of(sub_label("z", 1, i));
        int y2i1 = G.id_of(sub_label("y", 2, i + 1));
        if (y1i < 0 || z2i1 < 0 || z1i < 0 || y2i1 < 0) {
            throw InvalidSpec("prism diagonal endpoints missing");
        }
        G.add_edge(y1i, z2i1);
        G.add_edge(z1i, y2i1);
    }
}

Complex prime_of(const Complex& base, int k) {
    Graph G = skeleton_graph(base);
    add_prism_diagonals(G, k);
    Complex C = clique_complex(G);
    if (!C.is_pure() || C.dim() != 3) throw InvalidSpec("primed family did not produce a pure 3-complex");
    return C;
}

} // namespace

Complex build_W4_prime(int k) {
    if (k < 1) throw InvalidSpec("W' family needs k >= 1");
    return prime_of(build_W(4, k), k);
}

Complex build_X4_prime(int k, int j) {
    if (k < 1) throw InvalidSpec("X' family needs k >= 1");
    if (j < 0 || j > 3) throw InvalidSpec("X' family needs 0 <= j <= 3");
    return prime_of(build_X(4, k, j), k);
}

Complex build_Y4_prime(int k, int j) {
    if (k < 1) throw InvalidSpec("Y' family needs k >= 1");
    if (j < 1 || j > 3) throw InvalidSpec("Y' family needs 1 <= j <= 3");
    return prime_of(build_Y(4, k, j), k);
}

Complex crosspolytope(int d) {
    if (d < 1) throw InvalidSpec("crosspolytope needs d >= 1");
    std::map<int, std::string> labels;
    for (int i = 0; i < d; ++i) {
        labels.emplace(i, "p_" + std::to_string(i + 1));
        labels.emplace(d + i, "q_" + std::to_string(i + 1));
    }
    // facets: one vertex from each antipodal pair
    std::vector<std::vector<int>> facets;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        std::vector<int> f;
        for (int i = 0; i < d; ++i) f.push_back((mask >> i) & 1 ? d + i : i);
        facets.push_back(std::move(f));
    }
    return make_complex(std::move(facets), labels);
}

Complex polygon_suspension(int d, int n) {
    if (d < 2) throw InvalidSpec("polygon suspension needs d >= 2");
    long long gon = (long long)n - 2 * (d - 2);
    if (gon < 4) throw InvalidSpec("polygon suspension needs an (n-2(d-2))-gon with at least 4 vertices");
    std::map<int, std::string> labels;
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < gon; ++i) {
        labels.emplace(i, "c_" + std::to_string(i + 1));
        facets.push_back({i, int((i + 1) % gon)});
    }
    Complex C = make_complex(std::move(facets), labels);
    for (int s = 1; s <= d - 2; ++s) {
        C = suspension(C, "p_" + std::to_string(s), "q_" + std::to_string(s));
    }
    if (C.num_vertices() != n) throw InvalidSpec("polygon suspension vertex count mismatch");
    return C;
}

std::pair<std::vector<long long>, int> join_upper_split(int d, long long n) {
    if (d < 4) throw InvalidSpec("join construction needs d >= 4");
    int m = d / 4;
    int r = d - 4 * m;
    long long base = n - 2 * r;
    if (base < 8LL * m) throw InvalidSpec("n too small to split into 3-spheres of at least 8 vertices");
    std::vector<long long> sizes;
    long long q = base / m, rem = base % m;
    for (int i = 0; i < m; ++i) sizes.push_back(q + (i < rem ? 1 : 0));
    std::sort(sizes.begin(), sizes.end());
    return {sizes, r};
}

namespace {

// Every s >= 8 is the vertex count of some primed 3-sphere: X' covers
// s = 2 + j (mod 6) for j in 0..3 and Y' covers s = j - 1 (mod 6) for
// j in 1..3.
ConstructionSpec three_sphere_spec(long long s) {
    if (s < 8) throw InvalidSpec("3-sphere family needs at least 8 vertices");
    long long rx = (s - 2) % 6;
    if (rx <= 3) {
        long long j = rx, k = (s - 2 - j) / 6;
        if (k >= 1) return {Family::X4prime, {{"k", k}, {"j", j}}};
    }
    long long j = ((s - 5) % 6 + 6) % 6;
    long long k = (s - 5 - j) / 6;
    if (j >= 1 && j <= 3 && k >= 1) return {Family::Y4prime, {{"k", k}, {"j", j}}};
    throw InvalidSpec("no 3-sphere family instance on " + std::to_string(s) + " vertices");
}

} // namespace

Complex join_upper_family(int d, int n) {
    auto [sizes, r] = join_upper_split(d, n);
    Complex C = build(three_sphere_spec(sizes[0]));
    for (size_t i = 1; i < sizes.size(); ++i) {
        C = join_complexes(C, build(three_sphere_spec(sizes[i])));
    }
    for (int s = 1; s <= r; ++s) {
        C = suspension(C, "p_" + std::to_string(s), "q_" + std::to_string(s));
    }
    if (C.num_vertices() != n) throw InvalidSpec("join construction vertex count mismatch");
    if (!C.is_pure() || C.dim() != d - 1) throw InvalidSpec("join construction dimension mismatch");
    return C;
}

namespace {

// Gale evenness with vertices 1..m in the natural moment-curve order: every
// maximal run of chosen elements not touching 1 or m has even length.
bool gale_even(const std::vector<int>& subset, int m) {
    size_t i = 0;
    while (i < subset.size()) {
        size_t j = i;
        while (j + 1 < subset.size() && subset[j + 1] == subset[j] + 1) ++j;
        bool interior = subset[i] > 1 && subset[j] < m;
        if (interior && (j - i + 1) % 2 != 0) return false;
        i = j + 1;
    }
    return true;
}

} // namespace

Complex cyclic_boundary(int d, int m) {
    if (d < 2) throw InvalidSpec("cyclic boundary needs d >= 2");
    if (m <= d) throw InvalidSpec("cyclic boundary needs m > d");
    std::map<int, std::string> labels;
    for (int i = 1; i <= m; ++i) labels.emplace(i, "c_" + std::to_string(i));
    std::vector<std::vector<int>> facets;
    std::vector<int> subset(size_t(d), 0);
    // enumerate d-subsets of 1..m
    for (int i = 0; i < d; ++i) subset[size_t(i)] = i + 1;
    for (;;) {
        if (gale_even(subset, m)) facets.push_back(subset);
        int pos = d - 1;
        while (pos >= 0 && subset[size_t(pos)] == m - (d - 1 - pos)) --pos;
        if (pos < 0) break;
        ++subset[size_t(pos)];
        for (int i = pos + 1; i < d; ++i) subset[size_t(i)] = subset[size_t(i - 1)] + 1;
    }
    return make_complex(std::move(facets), labels);
}

Complex neighborly_subdivided(int d, int m) {
    Complex C = cyclic_boundary(d, m);
    std::vector<std::vector<int>> original = C.facets;
    for (size_t i = 0; i < original.size(); ++i) {
        C = stellar_subdivide_facet(C, original[i], "s_" + std::to_string(i + 1));
    }
    return C;
}

long long ConstructionSpec::param(const std::string& name) const {
    auto it = params.find(name);
    if (it == params.end()) throw InvalidSpec("missing parameter " + name);
    return it->second;
}

namespace {

struct FamilyInfo {
    Family family;
    const char* name;
    std::vector<std::string> param_names;
};

const std::vector<FamilyInfo>& family_table() {
    static const std::vector<FamilyInfo> table = {
        {Family::W, "W", {"d", "k"}},
        {Family::X, "X", {"d", "k", "j"}},
        {Family::Y, "Y", {"d", "k", "j"}},
        {Family::W4prime, "Wp", {"k"}},
        {Family::X4prime, "Xp", {"k", "j"}},
        {Family::Y4prime, "Yp", {"k", "j"}},
        {Family::Crosspolytope, "cross", {"d"}},
        {Family::PolygonSuspension, "polysusp", {"d", "n"}},
        {Family::JoinUpper, "joinupper", {"d", "n"}},
        {Family::CyclicBoundary, "cyclic", {"d", "m"}},
        {Family::NeighborlySubdivided, "neighborly", {"d", "m"}},
    };
    return table;
}

const FamilyInfo& info_for(Family f) {
    for (const auto& fi : family_table()) {
        if (fi.family == f) return fi;
    }
    throw InvalidSpec("unknown family");
}

} // namespace

std::string ConstructionSpec::to_string() const {
    const FamilyInfo& fi = info_for(family);
    std::ostringstream out;
    out << fi.name << ":";
    bool first = true;
    for (const auto& p : fi.param_names) {
        if (!first) out << ",";
        first = false;
        out << p << "=" << param(p);
    }
    return out.str();
}

std::string ConstructionSpec::file_stem() const {
    const FamilyInfo& fi = info_for(family);
    std::ostringstream out;
    out << fi.name;
    for (const auto& p : fi.param_names) out << "_" << p << param(p);
    return out.str();
}

ConstructionSpec parse_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw InvalidSpec("spec must look like FAMILY:key=value,...: " + text);
    std::string name = text.substr(0, colon);
    const FamilyInfo* fi = nullptr;
    for (const auto& cand : family_table()) {
        if (name == cand.name) { fi = &cand; break; }
    }
    if (!fi) throw InvalidSpec("unknown family '" + name + "'");
    ConstructionSpec spec;
    spec.family = fi->family;
    std::string rest = text.substr(colon + 1);
    std::istringstream in(rest);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw InvalidSpec("bad parameter '" + item + "' in spec " + text);
        std::string key = item.substr(0, eq);
        long long value = 0;
        try {
            size_t used = 0;
            value = std::stoll(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw InvalidSpec("bad integer in '" + item + "'");
        }
        if (std::find(fi->param_names.begin(), fi->param_names.end(), key) == fi->param_names.end()) {
            throw InvalidSpec("family " + name + " does not take parameter '" + key + "'");
        }
        if (!spec.params.emplace(key, value).second) throw InvalidSpec("duplicate parameter '" + key + "'");
    }
    for (const auto& p : fi->param_names) {
        if (!spec.params.count(p)) throw InvalidSpec("spec " + text + " is missing parameter '" + p + "'");
    }
    return spec;
}

Complex build(const ConstructionSpec& spec) {
    auto p = [&](const char* name) { return int(spec.param(name)); };
    switch (spec.family) {
        case Family::W: return build_W(p("d"), p("k"));
        case Family::X: return build_X(p("d"), p("k"), p("j"));
        case Family::Y: return build_Y(p("d"), p("k"), p("j"));
        case Family::W4prime: return build_W4_prime(p("k"));
        case Family::X4prime: return build_X4_prime(p("k"), p("j"));
        case Family::Y4prime: return build_Y4_prime(p("k"), p("j"));
        case Family::Crosspolytope: return crosspolytope(p("d"));
        case Family::PolygonSuspension: return polygon_suspension(p("d"), p("n"));
        case Family::JoinUpper: return join_upper_family(p("d"), p("n"));
        case Family::CyclicBoundary: return cyclic_boundary(p("d"), p("m"));
        case Family::NeighborlySubdivided: return neighborly_subdivided(p("d"), p("m"));
    }
    throw InvalidSpec("unknown family");
}

std::optional<long long> expected_alpha(const ConstructionSpec& spec) {
    switch (spec.family) {
        case Family::W:
        case Family::X:
            return spec.param("k") + 1;
        case Family::Y:
            return spec.param("k") + 2;
        case Family::W4prime:
        case Family::X4prime:
            return spec.param("k") + 1;
        case Family::Y4prime:
            return spec.param("k") + 2;
        case Family::Crosspolytope:
            return 2;
        case Family::PolygonSuspension: {
            long long gon = spec.param("n") - 2 * (spec.param("d") - 2);
            return gon / 2;
        }
        case Family::JoinUpper: {
            auto [sizes, r] = join_upper_split(int(spec.param("d")), spec.param("n"));
            long long best = r > 0 ? 2 : 0;
            for (long long s : sizes) best = std::max(best, (s + 1 + 5) / 6);
            return best;
        }
        case Family::CyclicBoundary:
        case Family::NeighborlySubdivided:
            return std::nullopt;
    }
    return std::nullopt;
}

ConstructionSpec find_alpha_witness_spec(int d, long long n) {
    if (d < 2 || n < 2 * d) throw InvalidSpec("witness needs d >= 2 and n >= 2d");
    if (d == 2) {
        // X(2,k,j): n = 2 + j + 2k with j in {0,1}
        long long j = (n % 2 == 0) ? 0 : 1;
        long long k = (n - 2 - j) / 2;
        if (k < 1) throw InvalidSpec("no d=2 witness on " + std::to_string(n) + " vertices");
        return {Family::X, {{"d", 2}, {"k", k}, {"j", j}}};
    }
    if (d == 3) {
        // X: n = 2 + j + 4k (j in 0..2), Y: n = 4 + j + 4k (j in 1..2)
        long long r = n % 4;
        if (r == 2) return {Family::X, {{"d", 3}, {"k", (n - 2) / 4}, {"j", 0}}};
        if (r == 3) return {Family::X, {{"d", 3}, {"k", (n - 3) / 4}, {"j", 1}}};
        if (r == 0) return {Family::X, {{"d", 3}, {"k", (n - 4) / 4}, {"j", 2}}};
        if (n >= 9) return {Family::Y, {{"d", 3}, {"k", (n - 5) / 4}, {"j", 1}}};
        throw InvalidSpec("no d=3 witness on " + std::to_string(n) + " vertices");
    }
    if (d == 4) {
        ConstructionSpec s = three_sphere_spec(n);
        return s;
    }
    ConstructionSpec s{Family::JoinUpper, {{"d", d}, {"n", n}}};
    join_upper_split(d, n); // throws if infeasible
    return s;
}

} // namespace flagsphere
