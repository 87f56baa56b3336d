#include "dqc/circuit.hpp"

#include <array>
#include <cmath>

namespace dqc {

namespace {

struct OpInfo {
    OneQubitOp op;
    std::string_view name;
    int arity;
};

constexpr std::array<OpInfo, 15> kOps = {{
    {OneQubitOp::U3, "u3", 3},
    {OneQubitOp::U2, "u2", 2},
    {OneQubitOp::U1, "u1", 1},
    {OneQubitOp::Rx, "rx", 1},
    {OneQubitOp::Ry, "ry", 1},
    {OneQubitOp::Rz, "rz", 1},
    {OneQubitOp::H, "h", 0},
    {OneQubitOp::X, "x", 0},
    {OneQubitOp::Y, "y", 0},
    {OneQubitOp::Z, "z", 0},
    {OneQubitOp::S, "s", 0},
    {OneQubitOp::Sdg, "sdg", 0},
    {OneQubitOp::T, "t", 0},
    {OneQubitOp::Tdg, "tdg", 0},
    {OneQubitOp::Id, "id", 0},
}};

const OpInfo& info_for(OneQubitOp op) {
    for (const auto& i : kOps) {
        if (i.op == op) return i;
    }
    throw std::logic_error("unknown OneQubitOp");
}

}  // namespace

std::string_view op_name(OneQubitOp op) { return info_for(op).name; }

int op_arity(OneQubitOp op) { return info_for(op).arity; }

bool lookup_op(std::string_view name, OneQubitOp& out) {
    for (const auto& i : kOps) {
        if (i.name == name) {
            out = i.op;
            return true;
        }
    }
    return false;
}

Gate Gate::one_qubit(OneQubitOp op, int target, std::vector<double> params) {
    if (static_cast<int>(params.size()) != op_arity(op)) {
        throw std::invalid_argument("gate " + std::string(op_name(op)) + " expects " +
                                    std::to_string(op_arity(op)) + " parameter(s), got " +
                                    std::to_string(params.size()));
    }
    Gate g;
    g.kind = GateKind::OneQubit;
    g.op = op;
    g.target = target;
    g.params = std::move(params);
    return g;
}

Gate Gate::cnot(int control, int target) {
    if (control == target) {
        throw std::invalid_argument("cx control and target must differ");
    }
    Gate g;
    g.kind = GateKind::Cnot;
    g.control = control;
    g.target = target;
    return g;
}

std::vector<int> Gate::qubits() const {
    if (is_cnot()) return {control, target};
    return {target};
}

bool Gate::operator==(const Gate& other) const {
    if (kind != other.kind) return false;
    if (is_cnot()) return control == other.control && target == other.target;
    return op == other.op && target == other.target && params == other.params;
}

Circuit::Circuit(int num_qubits, std::string name)
    : num_qubits_(num_qubits), name_(std::move(name)) {
    if (num_qubits < 0) {
        throw std::invalid_argument("circuit qubit count must be non-negative");
    }
}

void Circuit::add(Gate gate) {
    for (int q : gate.qubits()) {
        if (q < 0 || q >= num_qubits_) {
            throw std::out_of_range("gate references qubit " + std::to_string(q) +
                                    " in a circuit of " + std::to_string(num_qubits_) +
                                    " qubits");
        }
    }
    if (gate.is_cnot()) ++cnot_count_;
    gates_.push_back(std::move(gate));
}

bool Circuit::operator==(const Circuit& other) const {
    return num_qubits_ == other.num_qubits_ && gates_ == other.gates_;
}

std::vector<std::vector<int>> per_qubit_timelines(const Circuit& c) {
    std::vector<std::vector<int>> timelines(c.num_qubits());
    const auto& gates = c.gates();
    for (int seq = 0; seq < static_cast<int>(gates.size()); ++seq) {
        for (int q : gates[seq].qubits()) {
            timelines[q].push_back(seq);
        }
    }
    return timelines;
}

}  // namespace dqc
