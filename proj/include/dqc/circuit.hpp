#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dqc {

/// Single-qubit operations accepted by the IR. Everything else must be
/// decomposed into this set plus CNOT before ingestion.
enum class OneQubitOp {
    U3,
    U2,
    U1,
    Rx,
    Ry,
    Rz,
    H,
    X,
    Y,
    Z,
    S,
    Sdg,
    T,
    Tdg,
    Id,
};

enum class GateKind { OneQubit, Cnot };

/// Returns the QASM mnemonic for an operation ("u3", "sdg", ...).
std::string_view op_name(OneQubitOp op);

/// Number of angle parameters the operation takes (u3=3, u2=2, u1/r*=1, rest 0).
int op_arity(OneQubitOp op);

/// Looks up an operation by mnemonic; returns false if the name is unknown.
bool lookup_op(std::string_view name, OneQubitOp& out);

/// One gate of a circuit: either a named single-qubit operation or a CNOT.
/// The sequence number of a gate is its index in Circuit::gates().
struct Gate {
    GateKind kind = GateKind::OneQubit;
    OneQubitOp op = OneQubitOp::Id;  // meaningful when kind == OneQubit
    int control = -1;                // meaningful when kind == Cnot
    int target = 0;
    std::vector<double> params;      // angles, op_arity(op) entries

    static Gate one_qubit(OneQubitOp op, int target, std::vector<double> params = {});
    static Gate cnot(int control, int target);

    bool is_cnot() const { return kind == GateKind::Cnot; }

    /// Qubits touched by this gate (control first for CNOT).
    std::vector<int> qubits() const;

    bool operator==(const Gate& other) const;
};

/// Ordered list of gates over a fixed register of logical qubits.
/// Immutable once built (construction is append-only).
class Circuit {
public:
    explicit Circuit(int num_qubits, std::string name = "");

    void add(Gate gate);

    int num_qubits() const { return num_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }
    const Gate& gate(std::size_t seq) const { return gates_.at(seq); }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    int cnot_count() const { return cnot_count_; }
    int one_qubit_count() const { return static_cast<int>(gates_.size()) - cnot_count_; }

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    bool operator==(const Circuit& other) const;

private:
    int num_qubits_;
    int cnot_count_ = 0;
    std::string name_;
    std::vector<Gate> gates_;
};

/// For each qubit, the gate sequence numbers touching it, in circuit order.
/// A CNOT appears in both the control's and target's timeline, so the total
/// length over all qubits is one_qubit_count + 2 * cnot_count.
std::vector<std::vector<int>> per_qubit_timelines(const Circuit& c);

}  // namespace dqc
