#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qec/analysis.hpp"
#include "qec/channel.hpp"
#include "qec/clifford.hpp"
#include "qec/code.hpp"
#include "qec/constructions.hpp"
#include "qec/dense.hpp"
#include "qec/tableau.hpp"
#include "qec/threshold.hpp"

using nlohmann::json;
using namespace qec;

namespace {

constexpr int kSchemaVersion = 1;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CodeSource {
    std::string name;
    std::size_t param = 0;
    std::string file;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--name", name, "catalog code name");
        cmd->add_option("--param", param, "parameter for parameterized entries");
        cmd->add_option("--code", file, "code file path");
    }

    StabilizerCode load() const {
        if (!file.empty()) return code_from_text(read_file(file));
        if (!name.empty()) return catalog(name, param);
        throw input_error("specify --name or --code");
    }
};

void print_structured(json payload) {
    payload["schema_version"] = kSchemaVersion;
    std::cout << payload.dump(2) << '\n';
}

std::vector<double> parse_grid(const std::string& range) {
    double start = 0, stop = 0, step = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(range);
    if (!(in >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' ||
        step <= 0)
        throw input_error("grid must be start:stop:step with positive step");
    std::vector<double> grid;
    for (double p = start; p <= stop + 1e-12; p += step) grid.push_back(p);
    return grid;
}

json enumerator_json(const EnumeratorPolynomial& e) {
    return json(e.coefficients);
}

std::string format_mc_csv(std::size_t n, std::size_t k, double p,
                          const MonteCarloResult& r) {
    std::ostringstream out;
    out << "n,k,p,trials,failures,rate,stderr,seed\n"
        << n << ',' << k << ',' << std::setprecision(10) << p << ','
        << r.trials << ',' << r.failures << ',' << r.failure_rate << ','
        << r.std_error << ',' << r.seed << '\n';
    return out.str();
}

json mc_json(std::size_t n, std::size_t k, double p, const MonteCarloResult& r) {
    return json{{"n", n},
                {"k", k},
                {"p", p},
                {"trials", r.trials},
                {"failures", r.failures},
                {"rate", r.failure_rate},
                {"stderr", r.std_error},
                {"seed", r.seed}};
}

int run_catalog(bool list, const CodeSource& source, const std::string& format) {
    if (list) {
        const auto& entries = catalog_list();
        if (format == "structured") {
            json rows = json::array();
            for (const auto& e : entries)
                rows.push_back({{"name", e.name},
                                {"n", e.n},
                                {"k", e.k},
                                {"d", e.d},
                                {"parameterized", e.takes_param},
                                {"note", e.note}});
            print_structured({{"entries", rows}});
        } else if (format == "csv") {
            std::cout << "name,n,k,d,parameterized,note\n";
            for (const auto& e : entries)
                std::cout << e.name << ',' << e.n << ',' << e.k << ',' << e.d
                          << ',' << (e.takes_param ? 1 : 0) << ",\"" << e.note
                          << "\"\n";
        } else {
            for (const auto& e : entries) {
                std::cout << e.name << "  [" << e.n << ',' << e.k << ','
                          << e.d << ']';
                if (e.takes_param) std::cout << "  (parameter: " << e.param_name << ')';
                if (!e.note.empty()) std::cout << "  " << e.note;
                std::cout << '\n';
            }
        }
        return 0;
    }
    StabilizerCode code = source.load();
    if (format == "structured") {
        json gens = json::array(), lx = json::array(), lz = json::array();
        for (const auto& g : code.generators) gens.push_back(format_pauli(g));
        for (const auto& g : code.logical_x) lx.push_back(format_pauli(g));
        for (const auto& g : code.logical_z) lz.push_back(format_pauli(g));
        print_structured({{"name", code.name},
                          {"n", code.n},
                          {"k", code.k},
                          {"claimed_distance", code.claimed_distance},
                          {"generators", gens},
                          {"logical_x", lx},
                          {"logical_z", lz}});
    } else {
        std::cout << code_to_text(code);
    }
    return 0;
}

int run_analyze(const CodeSource& source, std::size_t cap,
                const std::string& format) {
    StabilizerCode code = source.load();
    DistanceReport dist = distance(code, cap);
    bool enumerators_ok = code.n <= 12;
    EnumeratorPolynomial a, b, s;
    if (enumerators_ok) {
        auto [ea, eb] = weight_enumerators(code);
        a = ea;
        b = eb;
        s = shadow_enumerator(code);
    }
    std::size_t d = dist.distance;
    std::size_t t = d > 0 ? (d - 1) / 2 : 0;
    BoundEvaluation hamming = hamming_bound(code.n, code.k, t);
    BoundEvaluation kl = kl_bound(code.n, code.k, d);
    BoundEvaluation gv = gv_bound(code.n, code.k, d);

    if (format == "structured") {
        json payload{{"name", code.name},
                     {"n", code.n},
                     {"k", code.k},
                     {"distance", dist.distance},
                     {"distance_exact", dist.exact},
                     {"degenerate", dist.degenerate},
                     {"hamming_satisfied", hamming.satisfied},
                     {"hamming_equality", hamming.equality},
                     {"kl_satisfied", kl.satisfied},
                     {"gv_satisfied", gv.satisfied}};
        if (dist.has_witness) payload["witness"] = format_pauli(dist.witness);
        if (dist.has_degeneracy_witness)
            payload["degeneracy_witness"] = format_pauli(dist.degeneracy_witness);
        if (enumerators_ok) {
            payload["enumerator_a"] = enumerator_json(a);
            payload["enumerator_b"] = enumerator_json(b);
            payload["shadow"] = enumerator_json(s);
        }
        print_structured(payload);
        return 0;
    }
    if (format == "csv") {
        std::cout << "name,n,k,distance,exact,degenerate,hamming_eq\n"
                  << code.name << ',' << code.n << ',' << code.k << ','
                  << dist.distance << ',' << dist.exact << ','
                  << dist.degenerate << ',' << hamming.equality << '\n';
        return 0;
    }
    std::cout << "code " << code.name << " [[" << code.n << ',' << code.k << ','
              << dist.distance << (dist.exact ? "" : "+") << "]]\n";
    std::cout << "degenerate: " << (dist.degenerate ? "yes" : "no") << '\n';
    if (dist.has_witness)
        std::cout << "distance witness: " << format_pauli(dist.witness) << '\n';
    if (dist.has_degeneracy_witness)
        std::cout << "degeneracy witness: "
                  << format_pauli(dist.degeneracy_witness) << '\n';
    if (enumerators_ok) {
        auto print_poly = [](const char* label, const EnumeratorPolynomial& e) {
            std::cout << label << ':';
            for (auto c : e.coefficients) std::cout << ' ' << c;
            std::cout << '\n';
        };
        print_poly("enumerator A", a);
        print_poly("enumerator B", b);
        print_poly("shadow S", s);
    }
    std::cout << "hamming bound: " << (hamming.satisfied ? "satisfied" : "violated")
              << (hamming.equality ? " with equality (perfect)" : "") << '\n';
    std::cout << "knill-laflamme bound: " << (kl.satisfied ? "satisfied" : "violated")
              << (kl.equality ? " with equality" : "") << '\n';
    std::cout << "gilbert-varshamov bound: "
              << (gv.satisfied ? "satisfied" : "violated") << '\n';
    return 0;
}

double encoder_min_fidelity(const StabilizerCode& code) {
    StabilizerCode frame = standard_frame_code(code);
    Circuit enc = encoder_circuit(code);
    std::vector<DenseState> codewords = codeword_states(frame);
    std::size_t n = code.n, k = code.k;
    double min_fid = 1.0;
    for (std::size_t c = 0; c < (std::size_t(1) << k); ++c) {
        std::size_t index = 0;
        for (std::size_t i = 0; i < k; ++i)
            if ((c >> i) & 1) index |= std::size_t(1) << (k - 1 - i);
        DenseState out = run_circuit_dense(enc, DenseState::basis(n, index));
        min_fid = std::min(min_fid, fidelity(out, codewords[c]));
    }
    return min_fid;
}

int run_encode(const CodeSource& source, bool certify, const std::string& format) {
    StabilizerCode code = source.load();
    Circuit enc = encoder_circuit(code);
    std::size_t two_qubit = two_qubit_gate_count(enc);
    double min_fid = -1.0;
    if (certify) {
        if (code.n > 14)
            throw feasibility_error("dense certification limited to n <= 14");
        min_fid = encoder_min_fidelity(code);
    }
    if (format == "structured") {
        json payload{{"name", code.name},
                     {"n", code.n},
                     {"k", code.k},
                     {"circuit", format_circuit(enc)},
                     {"two_qubit_gates", two_qubit},
                     {"total_gates", enc.gates.size()}};
        if (certify) payload["min_fidelity"] = min_fid;
        print_structured(payload);
        return 0;
    }
    std::cout << format_circuit(enc);
    std::cout << "# two-qubit gates: " << two_qubit << '\n';
    if (certify)
        std::cout << "# dense certification min fidelity: "
                  << std::setprecision(12) << min_fid << '\n';
    return 0;
}

int run_synth(const std::string& file, const std::string& format) {
    CliffordTableau t = tableau_from_text(read_file(file));
    Circuit c = synthesize_clifford(t);
    if (format == "structured") {
        print_structured({{"n", t.n},
                          {"circuit", format_circuit(c)},
                          {"two_qubit_gates", two_qubit_gate_count(c)},
                          {"total_gates", c.gates.size()}});
        return 0;
    }
    std::cout << format_circuit(c);
    std::cout << "# two-qubit gates: " << two_qubit_gate_count(c) << '\n';
    return 0;
}

int run_simulate(const std::string& file, std::uint64_t seed,
                 const std::string& format) {
    Circuit c = parse_circuit(read_file(file));
    for (const auto& g : c.gates)
        if (g.kind == GateKind::TOFFOLI)
            throw input_error("simulate accepts Clifford circuits only");
    StabilizerState s = StabilizerState::zero_state(c.n);
    std::mt19937_64 rng(seed);
    std::vector<MeasureResult> outcomes = run_circuit(s, c, rng);
    if (format == "structured") {
        json outs = json::array(), gens = json::array();
        for (const auto& m : outcomes)
            outs.push_back({{"outcome", m.outcome},
                            {"deterministic", m.deterministic}});
        for (const auto& g : s.stab) gens.push_back(format_pauli(g));
        print_structured({{"seed", seed},
                          {"measurements", outs},
                          {"stabilizer", gens}});
        return 0;
    }
    for (std::size_t i = 0; i < outcomes.size(); ++i)
        std::cout << "measurement " << i << ": "
                  << (outcomes[i].outcome > 0 ? "+1" : "-1")
                  << (outcomes[i].deterministic ? " (deterministic)" : "") << '\n';
    for (const auto& g : s.stab)
        std::cout << "stabilizer " << format_pauli(g) << '\n';
    return 0;
}

int run_capacity(bool curves, const std::string& grid_spec, bool erasure,
                 bool depolarizing, const CodeSource& source, std::size_t n,
                 std::size_t k, double p, std::size_t trials, std::uint64_t seed,
                 std::size_t jobs, const std::string& format) {
    if (curves) {
        std::cout << capacity_curves(parse_grid(grid_spec));
        return 0;
    }
    if (erasure) {
        MonteCarloResult r = erasure_monte_carlo(n, k, p, trials, seed, jobs);
        if (format == "structured")
            print_structured(mc_json(n, k, p, r));
        else
            std::cout << format_mc_csv(n, k, p, r);
        return 0;
    }
    if (depolarizing) {
        StabilizerCode code = source.load();
        MonteCarloResult r = depolarizing_monte_carlo(code, p, trials, seed, jobs);
        if (format == "structured")
            print_structured(mc_json(code.n, code.k, p, r));
        else
            std::cout << format_mc_csv(code.n, code.k, p, r);
        return 0;
    }
    throw input_error("choose one of --curves, --erasure, --depolarizing");
}

int run_threshold(const std::string& mode_name, bool table, double p0,
                  std::size_t levels, const std::string& format) {
    ThresholdMode mode = threshold_mode_from_name(mode_name);
    if (table) {
        std::cout << level_table_csv(mode, p0, levels);
        return 0;
    }
    double value = solve_threshold(mode);
    if (format == "structured") {
        print_structured({{"mode", mode_name}, {"threshold", value}});
    } else if (format == "csv") {
        std::cout << "mode,threshold\n"
                  << mode_name << ',' << std::setprecision(10) << value << '\n';
    } else {
        std::cout << "threshold (" << mode_name << "): " << std::scientific
                  << std::setprecision(6) << value << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stabilizer code toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "csv", "structured"}));
    };

    // catalog
    auto* cat = app.add_subcommand("catalog", "list or emit catalog codes");
    bool cat_list = false;
    CodeSource cat_source;
    cat->add_flag("--list", cat_list, "list catalog entries");
    cat_source.add_options(cat);
    add_format(cat);

    // analyze
    auto* ana = app.add_subcommand("analyze", "distance, enumerators, bounds");
    CodeSource ana_source;
    std::size_t ana_cap = 0;
    ana_source.add_options(ana);
    ana->add_option("--cap", ana_cap, "distance search weight cap");
    add_format(ana);

    // encode
    auto* enc = app.add_subcommand("encode", "emit and certify encoder network");
    CodeSource enc_source;
    bool enc_certify = false;
    enc_source.add_options(enc);
    enc->add_flag("--certify", enc_certify, "dense certification (n <= 14)");
    add_format(enc);

    // synth
    auto* syn = app.add_subcommand("synth", "synthesize a Clifford circuit");
    std::string syn_file;
    syn->add_option("--tableau", syn_file, "tableau file")->required();
    add_format(syn);

    // simulate
    auto* sim = app.add_subcommand("simulate", "run a Clifford circuit");
    std::string sim_file;
    std::uint64_t sim_seed = 0;
    sim->add_option("--circuit", sim_file, "circuit file")->required();
    sim->add_option("--seed", sim_seed, "measurement RNG seed");
    add_format(sim);

    // capacity
    auto* cap = app.add_subcommand("capacity", "channel experiments and curves");
    bool cap_curves = false, cap_erasure = false, cap_depol = false;
    std::string cap_grid = "0:0.5:0.01";
    CodeSource cap_source;
    std::size_t cap_n = 8, cap_k = 2, cap_trials = 1000, cap_jobs = 1;
    double cap_p = 0.1;
    std::uint64_t cap_seed = 0;
    cap->add_flag("--curves", cap_curves, "emit capacity bound curves");
    cap->add_option("--grid", cap_grid, "p grid start:stop:step");
    cap->add_flag("--erasure", cap_erasure, "erasure Monte Carlo on random codes");
    cap->add_flag("--depolarizing", cap_depol, "depolarizing Monte Carlo");
    cap_source.add_options(cap);
    cap->add_option("--n", cap_n, "qubit count for random codes");
    cap->add_option("--k", cap_k, "logical qubits for random codes");
    cap->add_option("--p", cap_p, "channel error probability");
    cap->add_option("--trials", cap_trials, "Monte Carlo trials");
    cap->add_option("--seed", cap_seed, "master RNG seed");
    cap->add_option("--jobs", cap_jobs, "worker thread count");
    add_format(cap);

    // threshold
    auto* thr = app.add_subcommand("threshold", "concatenated-code thresholds");
    std::string thr_mode = "gates_only";
    bool thr_table = false;
    double thr_p0 = 1e-5;
    std::size_t thr_levels = 6;
    thr->add_option("--mode", thr_mode, "threshold mode");
    thr->add_flag("--table", thr_table, "emit level-by-level CSV");
    thr->add_option("--p0", thr_p0, "starting rate for the level table");
    thr->add_option("--levels", thr_levels, "levels in the table");
    add_format(thr);

    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e);
        } catch (const CLI::ParseError& e) {
            app.exit(e);
            return 2;
        }
        if (*cat) return run_catalog(cat_list, cat_source, format);
        if (*ana) return run_analyze(ana_source, ana_cap, format);
        if (*enc) return run_encode(enc_source, enc_certify, format);
        if (*syn) return run_synth(syn_file, format);
        if (*sim) return run_simulate(sim_file, sim_seed, format);
        if (*cap)
            return run_capacity(cap_curves, cap_grid, cap_erasure, cap_depol,
                                cap_source, cap_n, cap_k, cap_p, cap_trials,
                                cap_seed, cap_jobs, format);
        if (*thr)
            return run_threshold(thr_mode, thr_table, thr_p0, thr_levels, format);
        throw input_error("no subcommand");
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const feasibility_error& e) {
        std::cerr << "feasibility error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
}
