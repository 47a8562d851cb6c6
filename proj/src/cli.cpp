#include "flagsphere/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>

#include <CLI11.hpp>

#include "flagsphere/acceptance.hpp"
#include "flagsphere/bounds.hpp"
#include "flagsphere/errors.hpp"
#include "flagsphere/io.hpp"

namespace flagsphere {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int cmd_generate(const std::string& spec_text, const std::string& out_dir, std::ostream& out) {
    ConstructionSpec spec = parse_spec(spec_text);
    Complex K = build(spec);
    std::filesystem::create_directories(out_dir);
    std::filesystem::path dir(out_dir);
    std::string stem = spec.file_stem();

    write_facets_file((dir / (stem + ".facets")).string(), K);
    write_graph_file((dir / (stem + ".graph")).string(), skeleton_graph(K));
    {
        std::ofstream mf(dir / "manifest.json");
        if (!mf) throw InvalidInput("cannot write manifest.json in " + out_dir);
        mf << manifest_json(spec, K).dump(2) << '\n';
    }
    out << (dir / (stem + ".facets")).string() << '\n';
    out << (dir / (stem + ".graph")).string() << '\n';
    out << (dir / "manifest.json").string() << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& path, uint64_t seed, std::ostream& out) {
    Complex K = read_facets_file(path);
    VerifyOptions opt;
    opt.seed = seed;
    SphereCert cert = verify_sphere(K, opt);
    out << sphere_cert_json(cert).dump(2) << '\n';
    switch (cert.verdict) {
        case SphereVerdict::CertifiedSphere: return kExitOk;
        case SphereVerdict::HomologySphere: return kExitInconclusive;
        case SphereVerdict::NotSphere: return kExitFail;
    }
    return kExitFail;
}

int cmd_alpha(const std::string& path, const std::string& method, long long budget_secs,
              std::ostream& out) {
    StableSetWitness w;
    if (method == "link") {
        if (!ends_with(path, ".facets")) {
            throw InvalidInput("--method link needs a .facets file (the complex, not just its graph)");
        }
        Complex K = read_facets_file(path);
        w = link_recursive_stable(K, K.dim() + 1);
    } else {
        Graph G = ends_with(path, ".facets") ? skeleton_graph(read_facets_file(path))
                                             : read_graph_file(path);
        if (method == "exact") {
            w = alpha_exact(G, std::chrono::milliseconds(budget_secs * 1000));
        } else if (method == "turan") {
            w = turan_stable(G);
        } else {
            throw InvalidInput("unknown method '" + method + "'");
        }
    }
    out << witness_json(w).dump(2) << '\n';
    if (w.method == "exact" && !w.optimal) return kExitInconclusive;
    return kExitOk;
}

int cmd_rigidity(const std::string& path, int dim, int probe_r, int trials, uint64_t seed,
                 std::ostream& out) {
    Complex K = read_facets_file(path);
    RigidityReport r = rigidity_report(K, dim, seed, trials, probe_r);
    out << rigidity_report_json(r).dump(2) << '\n';
    return kExitOk;
}

int cmd_table(int d, long long n_min, long long n_max, const std::string& kind,
              const std::string& format, std::ostream& out) {
    if (kind == "alpha") {
        auto rows = alpha_table(d, n_min, n_max);
        if (format == "json") {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& row : rows) j.push_back(bound_row_json(row));
            out << j.dump(2) << '\n';
        } else {
            out << std::setw(3) << "d" << std::setw(5) << "n" << std::setw(6) << "conj" << std::setw(7)
                << "alpha" << std::setw(7) << "upper" << std::setw(9) << "lower" << "  witness\n";
            for (const auto& row : rows) {
                out << std::setw(3) << row.d << std::setw(5) << row.n << std::setw(6) << row.conj_value;
                if (row.construction_alpha) out << std::setw(7) << *row.construction_alpha;
                else out << std::setw(7) << "-";
                if (row.upper_join) out << std::setw(7) << *row.upper_join;
                else out << std::setw(7) << "-";
                if (row.d >= 4) {
                    char buf[16];
                    std::snprintf(buf, sizeof buf, "%8.3f", row.lower_value);
                    out << buf;
                } else {
                    out << std::setw(8) << "-";
                }
                out << "  " << (row.witness_spec.empty() ? row.note : row.witness_spec) << '\n';
            }
        }
        for (const auto& row : rows) {
            if (row.construction_alpha && row.d >= 4 && !row.lower_ok) return kExitFail;
        }
        return kExitOk;
    }
    if (kind == "alphamax") {
        auto rows = alpha_max_table(d, n_min, n_max);
        if (format == "json") {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& row : rows) j.push_back(max_bound_row_json(row));
            out << j.dump(2) << '\n';
        } else {
            out << std::setw(3) << "d" << std::setw(5) << "n" << std::setw(6) << "conj" << std::setw(7)
                << "alpha" << "  status\n";
            for (const auto& row : rows) {
                out << std::setw(3) << row.d << std::setw(5) << row.n << std::setw(6) << row.conj_value
                    << std::setw(7) << row.alpha << "  "
                    << (row.asserted ? (row.matches ? "asserted" : "VIOLATED")
                                     : (row.matches ? "recorded=" : "recorded!"))
                    << '\n';
            }
        }
        return kExitOk;
    }
    throw InvalidInput("unknown table kind '" + kind + "'");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"flag simplicial spheres: constructions, stable sets, certification, rigidity"};
    app.require_subcommand(1);

    std::string spec_text, out_dir = ".";
    auto* generate = app.add_subcommand("generate", "build a family instance and write its files");
    generate->add_option("spec", spec_text, "construction spec, e.g. W:d=3,k=3")->required();
    generate->add_option("-o,--output", out_dir, "output directory");

    std::string verify_path;
    uint64_t seed = 0;
    auto* verify = app.add_subcommand("verify", "certify a .facets complex as a sphere");
    verify->add_option("file", verify_path, "input .facets file")->required();
    verify->add_option("--seed", seed, "random seed");

    std::string alpha_path, method = "exact";
    long long budget = 120;
    auto* alpha = app.add_subcommand("alpha", "maximum stable set of a .graph or .facets file");
    alpha->add_option("file", alpha_path, "input file")->required();
    alpha->add_option("--method", method, "exact | turan | link")
        ->check(CLI::IsMember({"exact", "turan", "link"}));
    alpha->add_option("--budget", budget, "solver budget in seconds");

    std::string rigidity_path;
    int dim = 0, probe_r = 0, trials = 3;
    auto* rigidity = app.add_subcommand("rigidity", "rigidity-matrix rank report for a .facets file");
    rigidity->add_option("file", rigidity_path, "input .facets file")->required();
    rigidity->add_option("--dim", dim, "embedding dimension d")->required();
    rigidity->add_option("--probe-r", probe_r, "also probe generic r-rigidity");
    rigidity->add_option("--trials", trials, "Monte Carlo trials");
    rigidity->add_option("--seed", seed, "random seed");

    int table_d = 0;
    long long n_min = 0, n_max = 0;
    std::string kind = "alpha", format = "text";
    auto* table = app.add_subcommand("table", "bound table over a range of n");
    table->add_option("--d", table_d, "dimension parameter d")->required();
    table->add_option("--n-min", n_min, "smallest n")->required();
    table->add_option("--n-max", n_max, "largest n")->required();
    table->add_option("--kind", kind, "alpha | alphamax")->check(CLI::IsMember({"alpha", "alphamax"}));
    table->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

    std::string suite = "all";
    auto* check = app.add_subcommand("check", "run the acceptance suites");
    check->add_option("--suite", suite, "alpha2 | alpha3 | spheres | rigidity | bounds | all");
    check->add_option("--seed", seed, "random seed");

    std::vector<const char*> argv;
    argv.push_back("flagsphere");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (generate->parsed()) return cmd_generate(spec_text, out_dir, out);
        if (verify->parsed()) return cmd_verify(verify_path, seed, out);
        if (alpha->parsed()) return cmd_alpha(alpha_path, method, budget, out);
        if (rigidity->parsed()) return cmd_rigidity(rigidity_path, dim, probe_r, trials, seed, out);
        if (table->parsed()) return cmd_table(table_d, n_min, n_max, kind, format, out);
        if (check->parsed()) return run_suite(suite, seed, out) ? kExitOk : kExitFail;
    } catch (const InvalidSpec& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}

} // namespace flagsphere
