#include "flagsphere/io.hpp"

#include <fstream>
#include <sstream>

#include "flagsphere/errors.hpp"

namespace flagsphere {

void write_facets(std::ostream& out, const Complex& K) {
    for (const auto& facet : K.facet_labels()) {
        for (size_t i = 0; i < facet.size(); ++i) {
            if (i) out << ' ';
            out << facet[i];
        }
        out << '\n';
    }
}

Complex read_facets(std::istream& in) {
    std::vector<std::vector<std::string>> facets;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> facet;
        std::string tok;
        while (ls >> tok) facet.push_back(tok);
        if (facet.empty()) continue;
        facets.push_back(std::move(facet));
    }
    if (facets.empty()) throw InvalidInput("no facets found in input");
    try {
        return from_facets(facets);
    } catch (const InvalidInput& e) {
        throw InvalidInput(std::string("bad facet data: ") + e.what());
    }
}

void write_facets_file(const std::string& path, const Complex& K) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot open for writing: " + path);
    write_facets(out, K);
}

Complex read_facets_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open: " + path);
    return read_facets(in);
}

void write_graph(std::ostream& out, const Graph& G) {
    out << G.n << ' ' << G.m << '\n';
    std::vector<std::pair<std::string, std::string>> lines;
    for (auto [u, v] : G.edges()) {
        std::string a = G.labels[size_t(u)], b = G.labels[size_t(v)];
        if (b < a) std::swap(a, b);
        lines.emplace_back(std::move(a), std::move(b));
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& [a, b] : lines) out << a << ' ' << b << '\n';
}

Graph read_graph(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw InvalidInput("missing graph header line");
    std::istringstream hs(line);
    long long n = 0, m = 0;
    if (!(hs >> n >> m) || n < 0 || m < 0) throw InvalidInput("bad graph header: " + line);
    std::vector<std::pair<std::string, std::string>> edge_labels;
    std::vector<std::string> labels;
    std::map<std::string, int> ids;
    auto intern = [&](const std::string& l) {
        auto it = ids.find(l);
        if (it != ids.end()) return it->second;
        int id = int(labels.size());
        ids.emplace(l, id);
        labels.push_back(l);
        return id;
    };
    int lineno = 1;
    for (long long e = 0; e < m; ++e) {
        if (!std::getline(in, line)) throw InvalidInput("unexpected end of graph file");
        ++lineno;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a >> b) || (ls >> extra)) {
            throw InvalidInput("line " + std::to_string(lineno) + ": expected 'label1 label2'");
        }
        edge_labels.emplace_back(a, b);
        intern(a);
        intern(b);
    }
    if ((long long)labels.size() > n) throw InvalidInput("more labels than declared vertices");
    while ((long long)labels.size() < n) {
        intern("v" + std::to_string(labels.size()));
    }
    Graph G(labels);
    for (const auto& [a, b] : edge_labels) G.add_edge(ids.at(a), ids.at(b));
    return G;
}

void write_graph_file(const std::string& path, const Graph& G) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot open for writing: " + path);
    write_graph(out, G);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open: " + path);
    return read_graph(in);
}

nlohmann::json witness_json(const StableSetWitness& w) {
    nlohmann::json j;
    j["method"] = w.method;
    j["size"] = w.size;
    j["vertices"] = w.labels;
    j["optimal"] = w.optimal;
    return j;
}

nlohmann::json sphere_cert_json(const SphereCert& c) {
    nlohmann::json j;
    j["verdict"] = verdict_name(c.verdict);
    j["reason"] = c.reason;
    j["betti_mod2"] = c.betti;
    j["links"] = c.link_summary;
    j["flip_trace_len"] = c.flip_trace_len;
    return j;
}

nlohmann::json rigidity_report_json(const RigidityReport& r) {
    nlohmann::json j;
    j["d"] = r.d;
    j["n"] = r.n;
    j["f1"] = r.f1;
    j["rank"] = r.rank;
    j["expected_rank"] = r.expected_rank;
    j["stress_dim"] = r.stress_dim;
    j["g2"] = r.g2;
    j["alpha_witness"] = r.alpha_witness;
    j["verdicts"] = {{"generically_d_rigid", r.generically_d_rigid},
                     {"stress_ge_alpha", r.stress_ge_alpha},
                     {"f1_bound_observed", r.f1_bound_observed}};
    if (r.probe_r > 0) {
        j["verdicts"]["d_plus_1_rigid"] = r.d_plus_1_rigid;
        j["probe_r"] = r.probe_r;
    }
    j["trials"] = r.trials;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3Le", r.fail_prob);
    j["fail_prob_bound"] = std::string(buf);
    return j;
}

nlohmann::json manifest_json(const ConstructionSpec& spec, const Complex& K) {
    nlohmann::json j;
    j["spec"] = spec.to_string();
    j["n"] = K.num_vertices();
    j["dim"] = K.dim();
    j["f_vector"] = f_vector(K).counts;
    auto a = expected_alpha(spec);
    if (a) j["expected_alpha"] = *a;
    else j["expected_alpha"] = nullptr;
    return j;
}

nlohmann::json bound_row_json(const BoundRow& row) {
    nlohmann::json j;
    j["d"] = row.d;
    j["n"] = row.n;
    j["conj_value"] = row.conj_value;
    if (row.construction_alpha) j["construction_alpha"] = *row.construction_alpha;
    else j["construction_alpha"] = nullptr;
    if (row.upper_join) j["upper_join"] = *row.upper_join;
    else j["upper_join"] = nullptr;
    if (row.d >= 4) {
        j["lower_ok"] = row.lower_ok;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", row.lower_value);
        j["lower_value"] = std::string(buf);
    }
    j["witness"] = row.witness_spec;
    if (!row.note.empty()) j["note"] = row.note;
    return j;
}

nlohmann::json max_bound_row_json(const MaxBoundRow& row) {
    nlohmann::json j;
    j["d"] = row.d;
    j["n"] = row.n;
    j["conj_value"] = row.conj_value;
    j["alpha"] = row.alpha;
    j["asserted"] = row.asserted;
    j["matches"] = row.matches;
    return j;
}

} // namespace flagsphere
