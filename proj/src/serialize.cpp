#include "dqc/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace dqc {

Json circuit_to_json(const Circuit& c) {
    Json gates = Json::array();
    for (const Gate& g : c.gates()) {
        Json jg;
        if (g.is_cnot()) {
            jg["kind"] = "cx";
            jg["qubits"] = {g.control, g.target};
        } else {
            jg["kind"] = std::string(op_name(g.op));
            jg["qubits"] = {g.target};
        }
        jg["params"] = g.params;
        gates.push_back(std::move(jg));
    }
    return Json{{"name", c.name()}, {"num_qubits", c.num_qubits()}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const Json& j) {
    Circuit c(j.at("num_qubits").get<int>(), j.value("name", std::string{}));
    for (const Json& jg : j.at("gates")) {
        std::string kind = jg.at("kind").get<std::string>();
        std::vector<int> qubits = jg.at("qubits").get<std::vector<int>>();
        std::vector<double> params = jg.value("params", std::vector<double>{});
        if (kind == "cx") {
            if (qubits.size() != 2) throw std::invalid_argument("cx needs two qubits");
            c.add(Gate::cnot(qubits[0], qubits[1]));
        } else {
            OneQubitOp op;
            if (!lookup_op(kind, op)) throw std::invalid_argument("unknown gate '" + kind + "'");
            if (qubits.size() != 1) throw std::invalid_argument(kind + " needs one qubit");
            c.add(Gate::one_qubit(op, qubits[0], std::move(params)));
        }
    }
    return c;
}

Json partitioning_to_json(const Partitioning& p) {
    return Json{{"k", p.k},
                {"assignment", p.assignment},
                {"cut_weight", p.cut_weight},
                {"part_sizes", p.part_sizes}};
}

Partitioning partitioning_from_json(const Json& j, const WeightedGraph& g) {
    Partitioning p = make_partitioning(g, j.at("assignment").get<std::vector<int>>(),
                                       j.at("k").get<int>());
    if (j.contains("cut_weight") && j.at("cut_weight").get<std::int64_t>() != p.cut_weight) {
        throw std::invalid_argument("stored cut_weight does not match the graph");
    }
    return p;
}

Json distributed_to_json(const DistributedCircuit& d) {
    Json events = Json::array();
    for (const DistEvent& e : d.events) {
        switch (e.kind) {
            case DistEvent::Kind::LocalGate:
                events.push_back(Json{{"kind", "local"}, {"time", e.time}, {"gate", e.gate_seq}});
                break;
            case DistEvent::Kind::NonlocalCnot:
                events.push_back(Json{{"kind", "nonlocal_cnot"},
                                      {"time", e.time},
                                      {"gate", e.gate_seq},
                                      {"qpus", {e.qpu_a, e.qpu_b}}});
                break;
            case DistEvent::Kind::Teleport:
                events.push_back(Json{{"kind", "teleport"},
                                      {"time", e.time},
                                      {"qubit", e.qubit},
                                      {"from", e.qpu_a},
                                      {"to", e.qpu_b}});
                break;
        }
    }
    return Json{{"circuit", circuit_to_json(d.source)},
                {"num_qpus", d.num_qpus},
                {"initial_placement", d.initial_placement},
                {"events", std::move(events)},
                {"ledger",
                 {{"nonlocal_cnots", d.ledger.nonlocal_cnots},
                  {"teleports", d.ledger.teleports},
                  {"total", d.ledger.total()}}}};
}

Json time_estimate_to_json(const TimeEstimate& t) {
    return Json{{"per_ebit_seconds", t.per_ebit_seconds},
                {"total_seconds", t.total_seconds},
                {"purification_rounds", t.purification_rounds},
                {"raw_pairs_per_ebit", t.raw_pairs_per_ebit},
                {"expected_raw_pairs", t.expected_raw_pairs},
                {"comm_budget_exceeded", t.comm_budget_exceeded}};
}

Json link_model_to_json(const LinkModel& m) {
    return Json{{"base_fidelity", m.base_fidelity},
                {"target_fidelity", m.target_fidelity},
                {"attempt_period", m.attempt_period},
                {"success_prob", m.success_prob},
                {"comm_qubits_per_node", m.comm_qubits_per_node},
                {"classical_rtt", m.classical_rtt}};
}

LinkModel link_model_from_json(const Json& j) {
    LinkModel m;
    m.base_fidelity = j.value("base_fidelity", m.base_fidelity);
    m.target_fidelity = j.value("target_fidelity", m.target_fidelity);
    m.attempt_period = j.value("attempt_period", m.attempt_period);
    m.success_prob = j.value("success_prob", m.success_prob);
    m.comm_qubits_per_node = j.value("comm_qubits_per_node", m.comm_qubits_per_node);
    m.classical_rtt = j.value("classical_rtt", m.classical_rtt);
    m.check();
    return m;
}

LinkModel load_link_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open link config '" + path + "'");
    Json j;
    in >> j;
    return link_model_from_json(j);
}

}  // namespace dqc
