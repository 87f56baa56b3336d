#include "dqc/cli.hpp"

#include "dqc/circuit.hpp"
#include "dqc/distribute.hpp"
#include "dqc/entangle.hpp"
#include "dqc/generate.hpp"
#include "dqc/graph.hpp"
#include "dqc/partition.hpp"
#include "dqc/qasm.hpp"
#include "dqc/serialize.hpp"
#include "dqc/simulate.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace dqc {

namespace {

const std::vector<std::string> kStrategies = {"qubit", "gate", "gate+postprocess", "random",
                                              "single-qpu"};

struct CommonOpts {
    std::string input;
    std::string gen_spec;
    int k = 2;
    double imbalance = 1.30;
    double capacity_fraction = 0.75;
    std::uint64_t seed = 1;
    std::string format = "csv";
    std::string output;
};

void add_input_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--input,-i", o.input, "QASM or circuit-JSON file");
    cmd->add_option("--gen", o.gen_spec, "generator spec: qft:N or tfim:N:STEPS");
}

void add_partition_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--k", o.k, "number of QPUs")->check(CLI::PositiveNumber);
    cmd->add_option("--imbalance", o.imbalance, "max part size / ceil(n/k)")
        ->check(CLI::Range(1.0, 64.0));
    cmd->add_option("--capacity-fraction", o.capacity_fraction,
                    "per-QPU capacity as a fraction of the circuit width")
        ->check(CLI::Range(0.01, 10.0));
    cmd->add_option("--seed", o.seed, "random seed");
}

void add_output_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output,-o", o.output, "write to file instead of stdout");
}

Circuit load_circuit(const CommonOpts& o) {
    if (!o.input.empty() && !o.gen_spec.empty()) {
        throw std::runtime_error("give either --input or --gen, not both");
    }
    if (!o.input.empty()) {
        if (o.input.size() > 5 && o.input.substr(o.input.size() - 5) == ".json") {
            std::ifstream in(o.input);
            if (!in) throw std::runtime_error("cannot open '" + o.input + "'");
            Json j;
            in >> j;
            return circuit_from_json(j);
        }
        std::vector<std::string> warnings;
        Circuit c = parse_qasm_file(o.input, &warnings);
        for (const auto& w : warnings) std::cerr << "warning: " << o.input << ": " << w << "\n";
        return c;
    }
    if (!o.gen_spec.empty()) {
        std::istringstream ss(o.gen_spec);
        std::string kind, a, b;
        std::getline(ss, kind, ':');
        std::getline(ss, a, ':');
        std::getline(ss, b, ':');
        if (kind == "qft" && !a.empty()) return gen_qft(std::stoi(a));
        if (kind == "tfim" && !a.empty() && !b.empty()) {
            return gen_tfim(std::stoi(a), std::stoi(b));
        }
        throw std::runtime_error("bad --gen spec '" + o.gen_spec + "'");
    }
    throw std::runtime_error("no input circuit: use --input or --gen");
}

std::ostream& open_output(const CommonOpts& o, std::ofstream& file) {
    if (o.output.empty()) return std::cout;
    file.open(o.output);
    if (!file) throw std::runtime_error("cannot write '" + o.output + "'");
    return file;
}

int qpu_capacity(const Circuit& c, double fraction) {
    return static_cast<int>(std::ceil(fraction * c.num_qubits()));
}

Json config_json(const CommonOpts& o, const std::string& strategy) {
    return Json{{"input", o.input.empty() ? o.gen_spec : o.input},
                {"strategy", strategy},
                {"k", o.k},
                {"imbalance", o.imbalance},
                {"capacity_fraction", o.capacity_fraction},
                {"seed", o.seed}};
}

struct StrategyResult {
    std::string strategy;
    std::int64_t ebits = 0;
    std::int64_t nonlocal_cnots = 0;
    std::int64_t teleports = 0;
    int max_qubits_per_node = 0;
    std::optional<DistributedCircuit> dist;  // absent for the modeled random baseline
};

// Runs one placement strategy. `random` reports the closed-form baseline
// (no sampled circuit); the others lower an actual partitioning.
StrategyResult run_strategy(const Circuit& c, const std::string& strategy,
                            const CommonOpts& o) {
    StrategyResult r;
    r.strategy = strategy;
    const int n = c.num_qubits();
    if (strategy == "single-qpu") {
        Partitioning p = make_partitioning(build_qubit_graph(c), std::vector<int>(n, 0), 1);
        r.dist = lower_qubit_partitioning(c, p);
        r.max_qubits_per_node = n;
        return r;
    }
    if (strategy == "random") {
        r.ebits = expected_random_ebits(n, c.cnot_count());
        r.max_qubits_per_node = (n + 1) / 2;
        return r;
    }
    PartitionConfig cfg{o.k, o.imbalance, o.seed, 8};
    if (strategy == "qubit") {
        Partitioning p = multilevel_partition(build_qubit_graph(c), cfg);
        r.dist = lower_qubit_partitioning(c, p);
    } else if (strategy == "gate" || strategy == "gate+postprocess") {
        Partitioning p = multilevel_partition(build_gate_graph(c), cfg);
        DistributedCircuit d = lower_gate_partitioning(c, p);
        if (strategy == "gate+postprocess") {
            QpuCaps caps{std::vector<int>(o.k, qpu_capacity(c, o.capacity_fraction))};
            d = post_process(d, caps);
        }
        r.dist = std::move(d);
    } else {
        throw std::runtime_error("unknown strategy '" + strategy + "'");
    }
    EbitReport rep = ebit_report(*r.dist);
    r.ebits = rep.total;
    r.nonlocal_cnots = rep.nonlocal_cnots;
    r.teleports = rep.teleports;
    r.max_qubits_per_node = rep.max_qubits_per_node;
    return r;
}

// ---------------------------------------------------------------- partition

int cmd_partition(const CommonOpts& o, const std::string& strategy,
                  const std::string& dump_graph, const std::string& save_partition) {
    Circuit c = load_circuit(o);
    if (!dump_graph.empty()) {
        WeightedGraph g = (strategy == "gate" || strategy == "gate+postprocess")
                              ? build_gate_graph(c)
                              : build_qubit_graph(c);
        std::ofstream out(dump_graph);
        if (!out) throw std::runtime_error("cannot write '" + dump_graph + "'");
        out << g.to_edge_list();
    }
    StrategyResult r = run_strategy(c, strategy, o);
    if (!save_partition.empty() && r.dist) {
        // Recover the partitioning that was used from the lowered circuit.
        PartitionConfig cfg{o.k, o.imbalance, o.seed, 8};
        WeightedGraph g = (strategy == "gate" || strategy == "gate+postprocess")
                              ? build_gate_graph(c)
                              : build_qubit_graph(c);
        Partitioning p = strategy == "single-qpu"
                             ? make_partitioning(g, std::vector<int>(g.num_nodes(), 0), 1)
                             : multilevel_partition(g, cfg);
        std::ofstream out(save_partition);
        if (!out) throw std::runtime_error("cannot write '" + save_partition + "'");
        out << partitioning_to_json(p).dump(2) << "\n";
    }

    std::ofstream file;
    std::ostream& out = open_output(o, file);
    if (o.format == "json") {
        Json j{{"benchmark", c.name()},
               {"qubits", c.num_qubits()},
               {"cnots", c.cnot_count()},
               {"strategy", r.strategy},
               {"max_qubits_per_node", r.max_qubits_per_node},
               {"ebits", r.ebits},
               {"nonlocal_cnots", r.nonlocal_cnots},
               {"teleports", r.teleports},
               {"config", config_json(o, strategy)}};
        out << j.dump(2) << "\n";
    } else {
        out << "# config " << config_json(o, strategy).dump() << "\n";
        out << "benchmark,qubits,cnots,strategy,max_qubits_per_node,ebits,nonlocal_cnots,"
               "teleports\n";
        out << c.name() << ',' << c.num_qubits() << ',' << c.cnot_count() << ',' << r.strategy
            << ',' << r.max_qubits_per_node << ',' << r.ebits << ',' << r.nonlocal_cnots << ','
            << r.teleports << "\n";
    }
    return 0;
}

// ----------------------------------------------------------------- estimate

int cmd_estimate(const CommonOpts& o, const std::string& strategy, LinkModel link,
                 std::vector<double> base_fidelities, bool comm_given, bool comm_from_config) {
    Circuit c = load_circuit(o);
    StrategyResult r = run_strategy(c, strategy, o);

    if (!comm_given && !comm_from_config) {
        // Communication qubits = per-QPU capacity left over by the widest
        // placement. The capacity itself follows the --capacity-fraction
        // sizing rule.
        int cap = qpu_capacity(c, o.capacity_fraction);
        link.comm_qubits_per_node = cap - r.max_qubits_per_node;
    }

    std::ofstream file;
    std::ostream& out = open_output(o, file);
    bool csv = o.format == "csv";
    Json rows = Json::array();
    if (csv) {
        out << "# config " << config_json(o, strategy).dump() << "\n";
        out << "benchmark,strategy,ebits,base_fidelity,target_fidelity,purification_rounds,"
               "raw_pairs_per_ebit,comm_qubits_per_node,per_ebit_seconds,total_seconds,"
               "comm_budget_exceeded\n";
    }
    for (double base : base_fidelities) {
        LinkModel m = link;
        m.base_fidelity = base;
        if (r.ebits == 0) {
            // Nothing crosses QPUs; no entanglement needed.
            if (csv) {
                out << c.name() << ',' << strategy << ",0," << base << ',' << m.target_fidelity
                    << ",0,1,," << 0.0 << ',' << 0.0 << ",false\n";
            } else {
                rows.push_back(Json{{"benchmark", c.name()},
                                    {"strategy", strategy},
                                    {"ebits", 0},
                                    {"base_fidelity", base},
                                    {"target_fidelity", m.target_fidelity},
                                    {"total_seconds", 0.0}});
            }
            continue;
        }
        if (m.comm_qubits_per_node < 1) {
            throw std::runtime_error(
                "no communication qubits left on a QPU (capacity " +
                std::to_string(qpu_capacity(c, o.capacity_fraction)) + ", residents " +
                std::to_string(r.max_qubits_per_node) + "); set --comm-qubits explicitly");
        }
        TimeEstimate t = estimate_total_time(m, r.ebits);
        if (t.comm_budget_exceeded) {
            std::cerr << "warning: purification needs " << t.raw_pairs_per_ebit
                      << " raw pairs held at once but only " << m.comm_qubits_per_node
                      << " comm qubits per node are available\n";
        }
        if (csv) {
            out << c.name() << ',' << strategy << ',' << r.ebits << ',' << base << ','
                << m.target_fidelity << ',' << t.purification_rounds << ','
                << t.raw_pairs_per_ebit << ',' << m.comm_qubits_per_node << ','
                << t.per_ebit_seconds << ',' << t.total_seconds << ','
                << (t.comm_budget_exceeded ? "true" : "false") << "\n";
        } else {
            Json row = time_estimate_to_json(t);
            row["benchmark"] = c.name();
            row["strategy"] = strategy;
            row["ebits"] = r.ebits;
            row["link"] = link_model_to_json(m);
            rows.push_back(std::move(row));
        }
    }
    if (!csv) {
        out << Json{{"config", config_json(o, strategy)}, {"rows", std::move(rows)}}.dump(2)
            << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------- pareto

int cmd_pareto(const CommonOpts& base_opts, const std::vector<std::string>& inputs,
               std::vector<std::string> strategies) {
    if (strategies.empty()) strategies = kStrategies;
    std::ofstream file;
    std::ostream& out = open_output(base_opts, file);
    bool csv = base_opts.format == "csv";
    Json rows = Json::array();
    if (csv) {
        out << "benchmark,qubits,cnots,strategy,max_partition,partition_fraction,ebits,"
               "ebit_cnot_ratio,advantage\n";
    }
    for (const std::string& input : inputs) {
        CommonOpts o = base_opts;
        o.input = input;
        o.gen_spec.clear();
        Circuit c = load_circuit(o);
        for (const std::string& strategy : strategies) {
            StrategyResult r = run_strategy(c, strategy, o);
            double fraction = static_cast<double>(r.max_qubits_per_node) / c.num_qubits();
            double ratio = c.cnot_count() == 0
                               ? 0.0
                               : static_cast<double>(r.ebits) / c.cnot_count();
            bool advantage = r.max_qubits_per_node < c.num_qubits() && ratio < 0.5;
            if (csv) {
                out << c.name() << ',' << c.num_qubits() << ',' << c.cnot_count() << ','
                    << strategy << ',' << r.max_qubits_per_node << ',' << fraction << ','
                    << r.ebits << ',' << ratio << ',' << (advantage ? "true" : "false") << "\n";
            } else {
                rows.push_back(Json{{"benchmark", c.name()},
                                    {"qubits", c.num_qubits()},
                                    {"cnots", c.cnot_count()},
                                    {"strategy", strategy},
                                    {"max_partition", r.max_qubits_per_node},
                                    {"partition_fraction", fraction},
                                    {"ebits", r.ebits},
                                    {"ebit_cnot_ratio", ratio},
                                    {"advantage", advantage}});
            }
        }
    }
    if (!csv) out << rows.dump(2) << "\n";
    return 0;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const CommonOpts& o, const std::string& strategy, const std::string& self_test,
               int num_inputs) {
    std::ofstream file;
    std::ostream& out = open_output(o, file);
    constexpr double kTol = 1e-8;

    if (!self_test.empty()) {
        double worst = self_test == "teleport" ? verify_state_teleportation(100, o.seed)
                                               : verify_nonlocal_cnot(100, o.seed);
        Json j{{"self_test", self_test}, {"trials", 100}, {"max_distance", worst},
               {"branches_checked", 4 * 100}, {"pass", worst <= kTol}};
        out << j.dump(2) << "\n";
        return worst <= kTol ? 0 : 1;
    }

    Circuit c = load_circuit(o);
    if (c.num_qubits() > StateVector::kMaxQubits - 2) {
        throw std::runtime_error("circuit too large to verify (max " +
                                 std::to_string(StateVector::kMaxQubits - 2) + " data qubits)");
    }
    CommonOpts strat_opts = o;
    StrategyResult r = run_strategy(c, strategy == "random" ? "qubit" : strategy, strat_opts);
    if (strategy == "random") {
        // Verification needs a concrete placement; sample one.
        Partitioning p = random_partition(build_qubit_graph(c), o.k, o.seed);
        r.dist = lower_qubit_partitioning(c, p);
    }
    EquivalenceOptions eq;
    eq.num_inputs = num_inputs;
    eq.seed = o.seed;
    double worst = verify_distributed_equivalence(c, *r.dist, eq);
    int measurements = 0;
    for (const DistEvent& e : r.dist->events) {
        if (e.kind != DistEvent::Kind::LocalGate) measurements += 2;
    }
    std::int64_t branches = measurements <= eq.enumerate_limit
                                ? (std::int64_t{1} << measurements) * num_inputs
                                : static_cast<std::int64_t>(eq.sampled_shots) * num_inputs;
    Json j{{"circuit", c.name()},
           {"strategy", strategy},
           {"max_distance", worst},
           {"branches_checked", branches},
           {"pass", worst <= kTol}};
    out << j.dump(2) << "\n";
    return worst <= kTol ? 0 : 1;
}

// ---------------------------------------------------------------------- gen

int cmd_gen(const std::string& kind, int n, int steps, const std::string& format,
            const CommonOpts& o) {
    Circuit c = kind == "qft" ? gen_qft(n) : gen_tfim(n, steps);
    std::ofstream file;
    std::ostream& out = open_output(o, file);
    if (format == "json") {
        out << circuit_to_json(c).dump(2) << "\n";
    } else {
        out << emit_qasm(c);
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"quantum circuit partitioning and distribution toolkit"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string strategy = "qubit";
    std::string dump_graph, save_partition, self_test;
    std::vector<std::string> pareto_inputs, pareto_strategies;
    int verify_inputs = 20;

    auto* partition = app.add_subcommand("partition", "partition a circuit and count e-bits");
    add_input_options(partition, o);
    add_partition_options(partition, o);
    add_output_options(partition, o);
    partition->add_option("--strategy", strategy, "placement strategy")
        ->check(CLI::IsMember(kStrategies));
    partition->add_option("--dump-graph", dump_graph, "write the partitioning graph edge list");
    partition->add_option("--save-partition", save_partition, "write the partitioning as JSON");

    auto* estimate = app.add_subcommand("estimate", "estimate distributed execution time");
    add_input_options(estimate, o);
    add_partition_options(estimate, o);
    add_output_options(estimate, o);
    estimate->add_option("--strategy", strategy, "placement strategy")
        ->check(CLI::IsMember(kStrategies));
    std::vector<double> base_fidelities;
    double target_fidelity = 0.9;
    double attempt_period = 10e-6, success_prob = 1e-3, classical_rtt = 500e-6;
    int comm_qubits = 0;
    std::string link_config;
    estimate->add_option("--base-fidelity", base_fidelities,
                         "heralded pair fidelity (repeatable; default 0.85 and 0.9)");
    auto* target_opt =
        estimate->add_option("--target-fidelity", target_fidelity, "required e-bit fidelity");
    auto* period_opt =
        estimate->add_option("--attempt-period", attempt_period, "seconds per heralding attempt");
    auto* prob_opt =
        estimate->add_option("--success-prob", success_prob, "heralding success probability");
    auto* comm_opt =
        estimate->add_option("--comm-qubits", comm_qubits,
                             "communication qubits per node (default: capacity - residents)");
    auto* rtt_opt =
        estimate->add_option("--classical-rtt", classical_rtt, "classical round-trip seconds");
    estimate->add_option("--link-config", link_config,
                         "JSON link model file (or set DQC_LINK_CONFIG)");

    auto* pareto = app.add_subcommand("pareto", "e-bit/qubit trade-off table over a batch");
    pareto->add_option("--input,-i", pareto_inputs, "circuit files (repeatable)")->required();
    pareto->add_option("--strategy", pareto_strategies, "strategies (default: all)")
        ->check(CLI::IsMember(kStrategies));
    add_partition_options(pareto, o);
    add_output_options(pareto, o);

    auto* verify = app.add_subcommand("verify", "check a lowering against the source circuit");
    add_input_options(verify, o);
    add_partition_options(verify, o);
    add_output_options(verify, o);
    verify->add_option("--strategy", strategy, "placement strategy")
        ->check(CLI::IsMember(kStrategies));
    verify->add_option("--self-test", self_test, "run a protocol self-test instead")
        ->check(CLI::IsMember({"teleport", "nonlocal-cnot"}));
    verify->add_option("--inputs", verify_inputs, "number of random input states");

    auto* gen = app.add_subcommand("gen", "emit a built-in benchmark circuit");
    std::string gen_kind;
    std::string gen_format = "qasm";
    int gen_n = 0, gen_steps = 1;
    gen->add_option("kind", gen_kind, "qft or tfim")
        ->required()
        ->check(CLI::IsMember({"qft", "tfim"}));
    gen->add_option("--n", gen_n, "number of qubits")->required()->check(CLI::PositiveNumber);
    gen->add_option("--steps", gen_steps, "trotter steps (tfim)")->check(CLI::PositiveNumber);
    gen->add_option("--format", gen_format, "qasm or json")
        ->check(CLI::IsMember({"qasm", "json"}));
    gen->add_option("--output,-o", o.output, "write to file instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (partition->parsed()) return cmd_partition(o, strategy, dump_graph, save_partition);
        if (estimate->parsed()) {
            LinkModel link;
            bool from_config = false;
            if (link_config.empty()) {
                if (const char* env = std::getenv("DQC_LINK_CONFIG")) link_config = env;
            }
            if (!link_config.empty()) {
                link = load_link_model(link_config);
                from_config = true;
            }
            // Explicit flags beat the config file, which beats defaults.
            if (target_opt->count() || !from_config) link.target_fidelity = target_fidelity;
            if (period_opt->count() || !from_config) link.attempt_period = attempt_period;
            if (prob_opt->count() || !from_config) link.success_prob = success_prob;
            if (rtt_opt->count() || !from_config) link.classical_rtt = classical_rtt;
            if (comm_opt->count() > 0) link.comm_qubits_per_node = comm_qubits;
            if (base_fidelities.empty()) {
                base_fidelities = from_config ? std::vector<double>{link.base_fidelity}
                                              : std::vector<double>{0.85, 0.9};
            }
            return cmd_estimate(o, strategy, link, base_fidelities, comm_opt->count() > 0,
                                from_config);
        }
        if (pareto->parsed()) return cmd_pareto(o, pareto_inputs, pareto_strategies);
        if (verify->parsed()) return cmd_verify(o, strategy, self_test, verify_inputs);
        if (gen->parsed()) return cmd_gen(gen_kind, gen_n, gen_steps, gen_format, o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace dqc
