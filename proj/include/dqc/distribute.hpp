#pragma once

#include "dqc/circuit.hpp"
#include "dqc/partition.hpp"

#include <cstdint>
#include <vector>

namespace dqc {

/// One step of a distributed circuit. Gate events reference the source
/// circuit by sequence number; teleports move a logical qubit between QPUs.
struct DistEvent {
    enum class Kind { LocalGate, NonlocalCnot, Teleport };

    Kind kind;
    int time;          // sequence number of the gate this event belongs to / precedes
    int gate_seq = -1; // LocalGate, NonlocalCnot
    int qubit = -1;    // Teleport
    int qpu_a = -1;    // NonlocalCnot: control side; Teleport: from
    int qpu_b = -1;    // NonlocalCnot: target side; Teleport: to
};

struct EbitLedger {
    std::int64_t nonlocal_cnots = 0;
    std::int64_t teleports = 0;

    std::int64_t total() const { return nonlocal_cnots + teleports; }
};

/// A circuit lowered onto a set of QPUs. Qubit positions over time are fully
/// determined by the initial placement plus the Teleport events in order.
struct DistributedCircuit {
    Circuit source{0};
    int num_qpus = 1;
    std::vector<int> initial_placement;  // per qubit, QPU at step 0
    std::vector<DistEvent> events;
    EbitLedger ledger;

    /// Per-qubit (time, qpu) moves including the initial placement at step 0.
    std::vector<std::vector<std::pair<int, int>>> placement_timeline() const;
};

/// Per-QPU limit on concurrently resident logical qubits.
struct QpuCaps {
    std::vector<int> caps;

    int total() const;
};

struct EbitReport {
    std::int64_t total = 0;
    std::int64_t nonlocal_cnots = 0;
    std::int64_t teleports = 0;
    int max_qubits_per_node = 0;
};

/// Static placement from a qubit-graph partitioning: qubits never move and
/// every partition-crossing CNOT becomes a NonlocalCnot. The e-bit total
/// equals the partitioning's cut weight.
DistributedCircuit lower_qubit_partitioning(const Circuit& c, const Partitioning& p);

/// Placement from a gate-graph partitioning: each qubit starts at the
/// partition of its first gate node and teleports whenever consecutive gate
/// nodes on its timeline land in different partitions. Cut CNOT-bond edges
/// become NonlocalCnots and cut chronological edges become Teleports, so the
/// e-bit total again equals the cut weight.
DistributedCircuit lower_gate_partitioning(const Circuit& c, const Partitioning& p);

/// Enforces per-QPU qubit caps by walking the circuit chronologically and,
/// before any arrival that would overflow a QPU, evicting a resident qubit
/// so the cap holds at every point of the event stream. The evicted qubit is
/// the one introducing the fewest additional nonlocal gates before its next
/// planned move (ties: least recently used, then lowest index), and it lands
/// on the QPU with the most free capacity (ties: lowest id). Subsequent
/// CNOTs are reclassified local/nonlocal from actual positions.
DistributedCircuit post_process(const DistributedCircuit& d, const QpuCaps& caps);

/// Ledger totals plus the maximum concurrent qubit count over all QPUs/times.
EbitReport ebit_report(const DistributedCircuit& d);

/// Replays the event stream and checks structural invariants: co-location of
/// local gates, separation of nonlocal CNOTs, gate order preservation, ledger
/// consistency, and (when caps are given) cap safety at every step.
/// Throws std::logic_error on the first violation.
void validate(const DistributedCircuit& d, const QpuCaps* caps = nullptr);

}  // namespace dqc
