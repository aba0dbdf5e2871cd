// qadia: compile circuits into conjugated adiabatic schedules, simulate
// them, and run the verification suites.

#include "qadia/circuit.hpp"
#include "qadia/direct_map.hpp"
#include "qadia/evolution.hpp"
#include "qadia/gadget.hpp"
#include "qadia/history.hpp"
#include "qadia/holonomy.hpp"
#include "qadia/kernels.hpp"
#include "qadia/operator_core.hpp"
#include "qadia/pauli.hpp"
#include "qadia/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qadia;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path().empty() ? fs::path(".") : path.parent_path());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

PauliSum load_h0(const std::string& spec, int n_min) {
    if (spec == "sum-z") {
        PauliSum h;
        h.qubits = n_min;
        for (int q = 1; q <= n_min; ++q) {
            std::string l(n_min, 'I');
            l[q - 1] = 'Z';
            h.add(1.0 + 0.1 * (q - 1), l);
        }
        return h;
    }
    return pauli_sum_from_text(slurp(spec));
}

json schedule_to_json(const Schedule& sch, const Circuit& c, const PauliSum& h0) {
    json j;
    j["schema_version"] = suites::schema_version;
    j["qubits"] = sch.qubits;
    j["circuit"] = print_circuit(c);
    j["h0"] = to_text(h0);
    j["segments"] = json::array();
    for (int i = 0; i < sch.segment_count(); ++i) {
        const auto& seg = sch.segments[i];
        json s;
        s["gate"] = gate_name(seg.gate.kind);
        s["targets"] = seg.gate.targets;
        s["h_base_pauli"] = to_text(seg.h_base_pauli);
        s["generator_pauli"] = to_text(seg.generator_pauli);
        j["segments"].push_back(std::move(s));
    }
    j["final_hamiltonian_pauli"] = to_text(pauli_decompose(sch.h_final));
    j["locality_growth"] = locality_growth(sch);
    return j;
}

int cmd_compile(const std::string& circuit_path, const std::string& h0_spec,
                const std::string& out_dir) {
    const Circuit c = parse_circuit(slurp(circuit_path));
    const PauliSum h0 = load_h0(h0_spec, c.qubit_count);
    const Schedule sch = assemble_schedule(c, h0);
    const json j = schedule_to_json(sch, c, h0);
    write_file(fs::path(out_dir) / "schedule.json", j.dump(2) + "\n");
    std::cout << "segments: " << sch.segment_count() << "\n";
    std::cout << "locality growth:";
    for (int l : j["locality_growth"]) std::cout << " " << l;
    std::cout << "\nfinal Hamiltonian:\n" << j["final_hamiltonian_pauli"].get<std::string>();
    std::cout << "wrote " << (fs::path(out_dir) / "schedule.json").string() << "\n";
    return 0;
}

int cmd_evolve(const std::string& circuit_path, const std::string& h0_spec, double T, int steps,
               double min_fidelity, const std::string& out_dir) {
    const Circuit c = parse_circuit(slurp(circuit_path));
    const PauliSum h0 = load_h0(h0_spec, c.qubit_count);
    const Schedule sch = assemble_schedule(c, h0);
    const Vector g0 = ground_state(to_dense(h0));
    const EvolutionResult r = evolve(sch, QuantumState(g0), T, steps);

    const Vector target = ground_state(sch.h_final);
    const double final_fidelity = fidelity(target, r.final_state.amp);
    write_file(fs::path(out_dir) / "trace.csv", trace_to_csv(r));
    json summary;
    summary["schema_version"] = suites::schema_version;
    summary["T"] = T;
    summary["steps"] = steps;
    summary["final_fidelity"] = final_fidelity;
    summary["min_gap"] = r.min_gap;
    summary["pass"] = final_fidelity >= min_fidelity;
    write_file(fs::path(out_dir) / "evolve_summary.json", summary.dump(2) + "\n");
    std::cout << "final ground-state fidelity: " << final_fidelity << " (threshold "
              << min_fidelity << ")\n";
    return final_fidelity >= min_fidelity ? 0 : 1;
}

int emit_suite(const json& report, const std::string& out_dir) {
    const std::string name = report["suite"].get<std::string>();
    write_file(fs::path(out_dir) / (name + "_report.json"), report.dump(2) + "\n");
    for (const auto& c : report["checks"])
        std::cout << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << name << "/"
                  << c["name"].get<std::string>() << "\n";
    return suites::suite_passed(report) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"circuit-to-adiabatic compiler and verification harness"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".";
    std::uint64_t seed = 12345;
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--seed", seed, "seed for randomized trials");

    std::string circuit_path, h0_spec = "sum-z", suite_name;
    double T = 200.0;
    int steps = 2000;
    double min_fidelity = 0.99;
    std::vector<double> deltas = {0.2, 0.1, 0.05};
    std::vector<double> t_list = {50.0, 200.0, 800.0};

    auto* compile = app.add_subcommand("compile", "compile a circuit into a schedule");
    compile->add_option("--circuit", circuit_path, "circuit file")->required();
    compile->add_option("--h0", h0_spec, "H0 pauli file or 'sum-z'");

    auto* evolve_cmd = app.add_subcommand("evolve", "integrate a compiled schedule");
    evolve_cmd->add_option("--circuit", circuit_path, "circuit file")->required();
    evolve_cmd->add_option("--h0", h0_spec, "H0 pauli file or 'sum-z'");
    evolve_cmd->add_option("--T", T, "total evolution time");
    evolve_cmd->add_option("--steps", steps, "integrator steps");
    evolve_cmd->add_option("--min-fidelity", min_fidelity, "exit-code threshold");

    auto* suite = app.add_subcommand("suite", "run a named verification suite");
    suite->add_option("name", suite_name, "theorem1 | gadget | holonomy | history")->required();

    auto* gadget_cmd = app.add_subcommand("gadget", "gadget deviation sweep");
    gadget_cmd->add_option("--deltas", deltas, "delta values");

    auto* holonomy_cmd = app.add_subcommand("holonomy", "holonomic CNOT fidelity sweep");
    holonomy_cmd->add_option("--T-list", t_list, "evolution times");

    auto* history_cmd = app.add_subcommand("history", "history-state cycle run");
    history_cmd->add_option("--T", T, "evolution time per leg");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) {
            const json cfg = json::parse(slurp(config_path));
            if (cfg.contains("seed")) seed = cfg["seed"].get<std::uint64_t>();
            if (cfg.contains("T")) T = cfg["T"].get<double>();
            if (cfg.contains("steps")) steps = cfg["steps"].get<int>();
            if (cfg.contains("deltas")) deltas = cfg["deltas"].get<std::vector<double>>();
            if (cfg.contains("t_list")) t_list = cfg["t_list"].get<std::vector<double>>();
            if (cfg.contains("min_fidelity")) min_fidelity = cfg["min_fidelity"].get<double>();
        }
        if (compile->parsed()) return cmd_compile(circuit_path, h0_spec, out_dir);
        if (evolve_cmd->parsed())
            return cmd_evolve(circuit_path, h0_spec, T, steps, min_fidelity, out_dir);
        if (suite->parsed()) return emit_suite(suites::run_suite(suite_name, seed), out_dir);
        if (gadget_cmd->parsed()) return emit_suite(suites::suite_gadget(deltas), out_dir);
        if (holonomy_cmd->parsed())
            return emit_suite(suites::suite_holonomy(t_list, seed), out_dir);
        if (history_cmd->parsed()) return emit_suite(suites::suite_history(150.0, T), out_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
