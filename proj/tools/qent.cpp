// Command-line front end: classifies user states and regenerates every
// table/trace/scan data series as CSV or JSON.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qent/classifier.hpp"
#include "qent/grover.hpp"
#include "qent/invariants4.hpp"
#include "qent/ketparse.hpp"
#include "qent/shor.hpp"

using namespace qent;
using nlohmann::json;

namespace {

struct GlobalConfig {
    std::string config_path;
    std::string format = "csv";
    std::string out_dir = ".";
    double tol_invariant = 1e-9;
    double tol_covariant = 1e-9;
    double tol_rank = 1e-9;
    int kmax = 25;

    classify::Options options() const {
        classify::Options opt;
        opt.tol_invariant = tol_invariant;
        opt.tol_covariant = tol_covariant;
        opt.tol_rank = tol_rank;
        return opt;
    }
};

void load_config_file(GlobalConfig& cfg) {
    if (cfg.config_path.empty()) return;
    std::ifstream in(cfg.config_path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + cfg.config_path);
    json j;
    in >> j;
    if (j.contains("tol_invariant")) cfg.tol_invariant = j["tol_invariant"].get<double>();
    if (j.contains("tol_covariant")) cfg.tol_covariant = j["tol_covariant"].get<double>();
    if (j.contains("tol_rank")) cfg.tol_rank = j["tol_rank"].get<double>();
    if (j.contains("kmax")) cfg.kmax = j["kmax"].get<int>();
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    if (j.contains("out")) cfg.out_dir = j["out"].get<std::string>();
}

void validate(const GlobalConfig& cfg) {
    for (double tol : {cfg.tol_invariant, cfg.tol_covariant, cfg.tol_rank}) {
        if (tol <= 0.0 || tol >= 1e-3) throw CLI::ValidationError("tolerance", "tolerances must be in (0, 1e-3)");
    }
    if (cfg.kmax < 1 || cfg.kmax > 200) throw CLI::ValidationError("--kmax", "k_max must be in [1, 200]");
}

std::ofstream open_out(const GlobalConfig& cfg, const std::string& name) {
    std::filesystem::create_directories(cfg.out_dir);
    const auto path = std::filesystem::path(cfg.out_dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    std::cout << "wrote " << path.string() << "\n";
    return out;
}

ket::StateVec load_state(const std::string& ket_expr, const std::string& amps_path, int qubits) {
    if (!ket_expr.empty()) {
        auto s = ketparse::parse_state(ket_expr);
        if (qubits > 0 && s.n != qubits)
            throw Error("state has " + std::to_string(s.n) + " qubits, expected " + std::to_string(qubits));
        return s;
    }
    std::ifstream in(amps_path);
    if (!in) throw Error("cannot open " + amps_path);
    json j;
    in >> j;
    std::vector<ket::Complex> amps;
    for (const auto& pair : j) amps.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    int n = 0;
    while ((std::size_t{1} << n) < amps.size()) ++n;
    if ((std::size_t{1} << n) != amps.size()) throw Error("amplitude count must be a power of two");
    if (qubits > 0 && n != qubits)
        throw Error("amplitude file has " + std::to_string(n) + " qubits, expected " + std::to_string(qubits));
    return ket::normalized(ket::StateVec{n, std::move(amps)});
}

int cmd_classify(const GlobalConfig& cfg, const std::string& ket_expr, const std::string& amps_path, int qubits) {
    const auto opt = cfg.options();
    const auto s = load_state(ket_expr, amps_path, qubits);

    json out;
    if (s.n == 4) {
        const auto cls = classify::verstraete_type(s, opt);
        const auto inv = inv4::compute_invariants(s);
        const auto qi = inv4::quartic_invariants(inv);
        out["label"] = std::string(classify::label(cls.family));
        json trace = json::array();
        for (const auto& [cond, value] : cls.trace.steps) trace.push_back({{"condition", cond}, {"value", value}});
        out["trace"] = trace;
        auto cplx = [](inv4::LComplex v) {
            return json::array({static_cast<double>(v.real()), static_cast<double>(v.imag())});
        };
        out["invariants"] = {{"H", cplx(inv.H)},   {"L", cplx(inv.L)},   {"M", cplx(inv.M)},
                             {"N", cplx(inv.N)},   {"Dxy", cplx(inv.Dxy)}, {"I2", cplx(qi.I2)},
                             {"I3", cplx(qi.I3)},  {"Det2222", cplx(qi.Det2222)}};
        out["absdet"] = static_cast<double>(std::abs(qi.Det2222));
    } else if (s.n == 3) {
        out["label"] = std::string(classify::label(classify::classify3(s, opt)));
        const auto det = classify::cayley_det222(s);
        out["det222"] = json::array({det.real(), det.imag()});
        out["absdet"] = std::abs(det);
    } else if (s.n == 2) {
        out["label"] = std::string(classify::label(classify::classify2(s, opt)));
    } else {
        out["label"] = classify::is_separable(s, opt) ? "Separable" : "Entangled";
    }
    json ranks = json::array();
    for (int q = 1; q <= s.n; ++q) ranks.push_back(classify::flattening_sigma2(s, q) <= opt.tol_rank ? 1 : 2);
    out["flattening_ranks"] = ranks;
    out["separable"] = classify::is_separable(s, opt);

    if (cfg.format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "label: " << out["label"].get<std::string>() << "\n";
        if (out.contains("invariants")) {
            for (const auto& key : {"H", "L", "M", "N", "Dxy", "I2", "I3", "Det2222"}) {
                const auto& v = out["invariants"][key];
                std::cout << key << ": " << v[0].get<double>() << (v[1].get<double>() < 0 ? " - " : " + ")
                          << std::abs(v[1].get<double>()) << "i\n";
            }
        }
        if (out.contains("absdet")) std::cout << "|Det|: " << out["absdet"].get<double>() << "\n";
        std::cout << "flattening ranks:";
        for (const auto& r : ranks) std::cout << " " << r.get<int>();
        std::cout << "\nseparable: " << (out["separable"].get<bool>() ? "yes" : "no") << "\n";
    }
    return 0;
}

void write_scan(const GlobalConfig& cfg, const grover::ScanResult& scans) {
    if (cfg.format == "json") {
        json j;
        for (const auto& [size, scan] : scans) {
            json u = json::array(), f = json::array();
            for (auto fam : scan.all_iterations) u.push_back(std::string(classify::label(fam)));
            for (auto fam : scan.first_iteration) f.push_back(std::string(classify::label(fam)));
            j[std::to_string(size)] = {{"union", u}, {"k1", f}};
        }
        auto out = open_out(cfg, "grover_scan.json");
        out << j.dump(2) << "\n";
    } else {
        auto out = open_out(cfg, "grover_scan.csv");
        out << "size,aggregation,labels\n";
        for (const auto& [size, scan] : scans) {
            out << size << ",union,";
            bool first = true;
            for (auto fam : scan.all_iterations) {
                out << (first ? "" : ";") << classify::label(fam);
                first = false;
            }
            out << "\n" << size << ",k1,";
            first = true;
            for (auto fam : scan.first_iteration) {
                out << (first ? "" : ";") << classify::label(fam);
                first = false;
            }
            out << "\n";
        }
    }
}

int cmd_grover_run(const GlobalConfig& cfg, const std::vector<std::uint32_t>& marked) {
    const auto traj = grover::run_trajectory(grover::make_marked_set(marked), cfg.kmax, cfg.options());
    std::string name = "grover_run_m";
    for (std::size_t i = 0; i < traj.marked.elems.size(); ++i)
        name += (i ? "-" : "") + std::to_string(traj.marked.elems[i]);
    if (cfg.format == "json") {
        json rows = json::array();
        for (const auto& st : traj.steps)
            rows.push_back({{"k", st.k}, {"label", std::string(classify::label(st.family))}, {"absdet", st.absdet}});
        auto out = open_out(cfg, name + ".json");
        out << rows.dump(2) << "\n";
    } else {
        auto out = open_out(cfg, name + ".csv");
        out << "k,label,absdet\n";
        out.precision(17);
        for (const auto& st : traj.steps) out << st.k << "," << classify::label(st.family) << "," << st.absdet << "\n";
    }
    return 0;
}

int cmd_grover_appendix(const GlobalConfig& cfg) {
    const auto rows = grover::appendix_a_check(cfg.kmax, cfg.options());
    int misses = 0;
    auto emit = [&](std::ostream& out, bool csv) {
        if (csv) out << "expected,marked,found_at\n";
        for (const auto& row : rows) {
            std::string marked;
            for (std::size_t i = 0; i < row.marked.elems.size(); ++i)
                marked += (i ? " " : "") + std::to_string(row.marked.elems[i]);
            if (csv) {
                out << classify::label(row.expected) << "," << (row.listed ? marked : "none listed") << ","
                    << (!row.listed ? "skipped" : row.found_at >= 0 ? std::to_string(row.found_at) : "MISS") << "\n";
            }
            if (row.listed && row.found_at < 0) ++misses;
        }
    };
    auto out = open_out(cfg, "grover_appendix_a.csv");
    emit(out, true);
    std::cout << (misses == 0 ? "all listed rows found\n" : std::to_string(misses) + " row(s) missed\n");
    return misses == 0 ? 0 : 1;
}

void write_grid(const GlobalConfig& cfg, const std::string& name, int n,
                const std::vector<std::vector<classify::Family>>& grid) {
    const int N = 1 << n;
    if (cfg.format == "json") {
        json rows = json::array();
        for (int r = 1; r < N; ++r) {
            json row = json::array();
            for (int l = 0; l < N; ++l) row.push_back(std::string(classify::label(grid[r - 1][l])));
            rows.push_back(row);
        }
        auto out = open_out(cfg, name + ".json");
        out << rows.dump(2) << "\n";
    } else {
        auto out = open_out(cfg, name + ".csv");
        out << "r\\l";
        for (int l = 0; l < N; ++l) out << "," << l;
        out << "\n";
        for (int r = 1; r < N; ++r) {
            out << r;
            for (int l = 0; l < N; ++l) out << "," << classify::label(grid[r - 1][l]);
            out << "\n";
        }
    }
}

int cmd_shor_trace(const GlobalConfig& cfg, int l, int r) {
    classify::Options opt = cfg.options();
    const auto trace = shor::qft_trace(shor::make_spec(4, l, r), opt);
    auto out = open_out(cfg, "shor_trace_l" + std::to_string(l) + "_r" + std::to_string(r) + ".csv");
    out << "step,gate,absdet\n";
    out.precision(17);
    for (int i = 0; i < 12; ++i)
        out << i << "," << shor::qft_step_names()[static_cast<std::size_t>(i)] << ","
            << trace.values[static_cast<std::size_t>(i)] << "\n";
    std::cout << "case: " << shor::trace_case_name(trace.kase);
    if (trace.kase == shor::TraceCase::BecomesNonzero) std::cout << " at step " << trace.step;
    std::cout << "\n";
    return 0;
}

int cmd_shor_props(const GlobalConfig& cfg, int nmax) {
    const auto report = shor::check_propositions(nmax);
    auto out = open_out(cfg, "shor_props.csv");
    out << "check,cases,failed\n";
    bool ok = true;
    for (const auto& check : report.checks) {
        out << '"' << check.name << '"' << "," << check.checked << "," << check.failed << "\n";
        if (!check.ok()) {
            ok = false;
            std::cout << "FAIL " << check.name << "\n";
            for (const auto& f : check.failures) std::cout << "    " << f << "\n";
        }
    }
    std::cout << (ok ? "all propositions hold\n" : "propositions failed\n");
    return ok ? 0 : 1;
}

int cmd_shor_phi(const GlobalConfig& cfg) {
    const auto report = shor::phi_chain_check(cfg.options());
    auto out = open_out(cfg, "shor_phi_chain.csv");
    out << "kind,detail,result\n";
    bool ok = true;
    for (const auto& a : report.arrows) {
        out << "arrow,phi" << a.from << "->phi" << a.to << "," << (a.ok ? "ok" : "FAIL") << "\n";
        ok = ok && a.ok;
    }
    for (const auto& l : report.labels) {
        out << "orbit,phi" << l.index << " printed " << classify::label(l.printed) << " computed "
            << classify::label(l.computed) << ","
            << (l.match ? "match" : l.flagged_discrepancy ? "FLAGGED (printed label contradicts separability)"
                                                          : "mismatch")
            << "\n";
    }
    std::cout << (ok ? "all chain arrows verified\n" : "chain arrow failure\n");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SLOCC entanglement classification for search and period-finding circuit states"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may appear after the subcommand

    GlobalConfig cfg;
    app.add_option("--config", cfg.config_path, "JSON config file (flags take precedence)");
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", cfg.out_dir, "output directory");
    app.add_option("--tol-invariant", cfg.tol_invariant, "invariant zero tolerance");
    app.add_option("--tol-covariant", cfg.tol_covariant, "covariant zero tolerance");
    app.add_option("--kmax", cfg.kmax, "search iteration bound");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "classify a state");
    std::string ket_expr, amps_path;
    int qubits = 0;
    auto* ket_opt = classify_cmd->add_option("--ket", ket_expr, "ket expression");
    classify_cmd->add_option("--amps", amps_path, "JSON amplitude file ([re, im] pairs)")->excludes(ket_opt);
    classify_cmd->add_option("--qubits", qubits, "expected qubit count");

    // grover
    auto* grover_cmd = app.add_subcommand("grover", "search-state scans");
    grover_cmd->require_subcommand(1);
    auto* scan_cmd = grover_cmd->add_subcommand("scan", "exhaustive scan over marked-set sizes");
    std::vector<int> sizes;
    scan_cmd->add_option("--sizes", sizes, "marked-set sizes")->required()->delimiter(',');
    auto* run_cmd = grover_cmd->add_subcommand("run", "single trajectory");
    std::vector<std::uint32_t> marked;
    run_cmd->add_option("--marked", marked, "marked basis indices")->required()->delimiter(',');
    auto* appendix_cmd = grover_cmd->add_subcommand("appendix-a", "check the marked-set example table");

    // shor
    auto* shor_cmd = app.add_subcommand("shor", "periodic states and the transform");
    shor_cmd->require_subcommand(1);
    auto* table_cmd = shor_cmd->add_subcommand("table", "periodic-state family grid");
    int table_n = 4;
    bool after_qft = false;
    table_cmd->add_option("--n", table_n, "qubit count (3 or 4)")->check(CLI::IsMember({3, 4}));
    table_cmd->add_flag("--after-qft", after_qft, "classify the transformed states");
    auto* trace_cmd = shor_cmd->add_subcommand("trace", "gate-by-gate |Det| trace");
    int trace_l = 0, trace_r = 1;
    trace_cmd->add_option("--l", trace_l, "shift")->required();
    trace_cmd->add_option("--r", trace_r, "period")->required();
    auto* props_cmd = shor_cmd->add_subcommand("props", "periodic-state propositions");
    int nmax = 8;
    props_cmd->add_option("--nmax", nmax, "largest qubit count");
    auto* phi_cmd = shor_cmd->add_subcommand("phi-chain", "printed transform chain check");

    CLI11_PARSE(app, argc, argv);

    try {
        load_config_file(cfg);
        validate(cfg);
        if (classify_cmd->parsed()) {
            if (ket_expr.empty() && amps_path.empty()) throw Error("classify needs --ket or --amps");
            return cmd_classify(cfg, ket_expr, amps_path, qubits);
        }
        if (grover_cmd->parsed()) {
            if (scan_cmd->parsed()) {
                write_scan(cfg, grover::scan_families(sizes, cfg.kmax, cfg.options()));
                return 0;
            }
            if (run_cmd->parsed()) return cmd_grover_run(cfg, marked);
            if (appendix_cmd->parsed()) return cmd_grover_appendix(cfg);
        }
        if (shor_cmd->parsed()) {
            if (table_cmd->parsed()) {
                const std::string name =
                    "shor_table_n" + std::to_string(table_n) + (after_qft ? "_qft" : "");
                write_grid(cfg, name, table_n, shor::periodic_table(table_n, after_qft, cfg.options()));
                return 0;
            }
            if (trace_cmd->parsed()) return cmd_shor_trace(cfg, trace_l, trace_r);
            if (props_cmd->parsed()) return cmd_shor_props(cfg, nmax);
            if (phi_cmd->parsed()) return cmd_shor_phi(cfg);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
