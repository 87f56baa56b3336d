#include "dqc/distribute.hpp"

#include "dqc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dqc {

namespace {

void check_sizes(const Circuit& c, const Partitioning& p, int expected_nodes) {
    if (static_cast<int>(p.assignment.size()) != expected_nodes) {
        throw std::invalid_argument("partitioning does not match circuit (" +
                                    std::to_string(p.assignment.size()) + " nodes, expected " +
                                    std::to_string(expected_nodes) + ")");
    }
    (void)c;
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> DistributedCircuit::placement_timeline() const {
    std::vector<std::vector<std::pair<int, int>>> timeline(source.num_qubits());
    for (int q = 0; q < source.num_qubits(); ++q) {
        timeline[q].push_back({0, initial_placement[q]});
    }
    for (const DistEvent& e : events) {
        if (e.kind == DistEvent::Kind::Teleport) {
            timeline[e.qubit].push_back({e.time, e.qpu_b});
        }
    }
    return timeline;
}

int QpuCaps::total() const { return std::accumulate(caps.begin(), caps.end(), 0); }

DistributedCircuit lower_qubit_partitioning(const Circuit& c, const Partitioning& p) {
    check_sizes(c, p, c.num_qubits());
    DistributedCircuit d;
    d.source = c;
    d.num_qpus = p.k;
    d.initial_placement = p.assignment;
    const auto& gates = c.gates();
    for (int seq = 0; seq < static_cast<int>(gates.size()); ++seq) {
        const Gate& g = gates[seq];
        if (g.is_cnot() && p.assignment[g.control] != p.assignment[g.target]) {
            d.events.push_back({DistEvent::Kind::NonlocalCnot, seq, seq, -1,
                                p.assignment[g.control], p.assignment[g.target]});
            ++d.ledger.nonlocal_cnots;
        } else {
            d.events.push_back({DistEvent::Kind::LocalGate, seq, seq, -1, -1, -1});
        }
    }
    return d;
}

DistributedCircuit lower_gate_partitioning(const Circuit& c, const Partitioning& p) {
    WeightedGraph gg = build_gate_graph(c);
    check_sizes(c, p, gg.num_nodes());

    // Node ids in gate-graph construction order: walk the labels once to map
    // (gate, qubit) -> partition of the corresponding node.
    // part_of_gate_on_qubit[seq] holds {control-or-single node part, target part}.
    std::vector<std::pair<int, int>> gate_parts(c.size(), {-1, -1});
    std::vector<int> first_part(c.num_qubits(), 0);
    std::vector<bool> seen_qubit(c.num_qubits(), false);
    for (int node = 0; node < gg.num_nodes(); ++node) {
        const NodeLabel& label = gg.labels[node];
        int part = p.assignment[node];
        if (label.role == NodeRole::CnotTargetHalf) {
            gate_parts[label.gate_seq].second = part;
        } else {
            gate_parts[label.gate_seq].first = part;
        }
        if (!seen_qubit[label.qubit]) {
            seen_qubit[label.qubit] = true;
            first_part[label.qubit] = part;
        }
    }

    DistributedCircuit d;
    d.source = c;
    d.num_qpus = p.k;
    d.initial_placement = first_part;

    std::vector<int> loc = first_part;
    const auto& gates = c.gates();
    for (int seq = 0; seq < static_cast<int>(gates.size()); ++seq) {
        const Gate& g = gates[seq];
        if (g.is_cnot()) {
            int cpart = gate_parts[seq].first;
            int tpart = gate_parts[seq].second;
            if (loc[g.control] != cpart) {
                d.events.push_back(
                    {DistEvent::Kind::Teleport, seq, -1, g.control, loc[g.control], cpart});
                ++d.ledger.teleports;
                loc[g.control] = cpart;
            }
            if (loc[g.target] != tpart) {
                d.events.push_back(
                    {DistEvent::Kind::Teleport, seq, -1, g.target, loc[g.target], tpart});
                ++d.ledger.teleports;
                loc[g.target] = tpart;
            }
            if (cpart != tpart) {
                d.events.push_back({DistEvent::Kind::NonlocalCnot, seq, seq, -1, cpart, tpart});
                ++d.ledger.nonlocal_cnots;
            } else {
                d.events.push_back({DistEvent::Kind::LocalGate, seq, seq, -1, -1, -1});
            }
        } else {
            int part = gate_parts[seq].first;
            if (loc[g.target] != part) {
                d.events.push_back(
                    {DistEvent::Kind::Teleport, seq, -1, g.target, loc[g.target], part});
                ++d.ledger.teleports;
                loc[g.target] = part;
            }
            d.events.push_back({DistEvent::Kind::LocalGate, seq, seq, -1, -1, -1});
        }
    }
    return d;
}

namespace {

// Scratch state for the cap-enforcement scan.
struct PostProcessor {
    const DistributedCircuit& in;
    const QpuCaps& caps;
    DistributedCircuit out;
    std::vector<int> loc;        // actual location per qubit
    std::vector<int> residents;  // per QPU
    std::vector<int> last_use;   // per qubit, last event index that touched it
    std::size_t cursor = 0;      // index into in.events of the next event

    PostProcessor(const DistributedCircuit& d, const QpuCaps& qcaps) : in(d), caps(qcaps) {}

    // Number of CNOTs on `q` with a partner currently on `vacated`, scanning
    // forward until q's next planned teleport in the original event stream.
    int eviction_cost(int q, int vacated, std::size_t scan_from) const {
        int cost = 0;
        for (std::size_t i = scan_from; i < in.events.size(); ++i) {
            const DistEvent& e = in.events[i];
            if (e.kind == DistEvent::Kind::Teleport) {
                if (e.qubit == q) break;  // original plan moves q; lookahead ends
                continue;
            }
            const Gate& g = in.source.gate(e.gate_seq);
            if (!g.is_cnot()) continue;
            int partner = -1;
            if (g.control == q) partner = g.target;
            if (g.target == q) partner = g.control;
            if (partner >= 0 && loc[partner] == vacated) ++cost;
        }
        return cost;
    }

    // Evicts residents of `qpu` until one more qubit fits, choosing victims
    // by the smallest-added-nonlocal-gates rule. Runs before an arrival so
    // the cap holds at every point of the event stream. When emit is false
    // the move only rewrites placement (used while the initial placement is
    // being settled, where moves are free).
    void make_room(int qpu, int time, bool emit, std::size_t scan_from) {
        while (residents[qpu] >= caps.caps[qpu]) {
            int victim = -1;
            int victim_cost = 0;
            for (int q = 0; q < in.source.num_qubits(); ++q) {
                if (loc[q] != qpu) continue;
                int cost = eviction_cost(q, qpu, scan_from);
                if (victim < 0 || cost < victim_cost ||
                    (cost == victim_cost && last_use[q] < last_use[victim]) ||
                    (cost == victim_cost && last_use[q] == last_use[victim] && q < victim)) {
                    victim = q;
                    victim_cost = cost;
                }
            }
            int dest = -1;
            for (int x = 0; x < in.num_qpus; ++x) {
                if (x == qpu) continue;
                int free = caps.caps[x] - residents[x];
                if (dest < 0 || free > caps.caps[dest] - residents[dest]) dest = x;
            }
            if (victim < 0 || dest < 0 || residents[dest] >= caps.caps[dest]) {
                throw std::runtime_error("no eviction destination with free capacity");
            }
            if (emit) {
                out.events.push_back({DistEvent::Kind::Teleport, time, -1, victim, qpu, dest});
                ++out.ledger.teleports;
            }
            loc[victim] = dest;
            --residents[qpu];
            ++residents[dest];
        }
    }

    DistributedCircuit run() {
        int n = in.source.num_qubits();
        out.source = in.source;
        out.num_qpus = in.num_qpus;
        loc.assign(n, -1);
        residents.assign(in.num_qpus, 0);
        last_use.assign(n, -1);

        // Initial placement is free to rearrange: admit qubits in index order
        // and resolve overflows with the same eviction rule. Moves made here
        // change the initial placement instead of spending teleports.
        for (int q = 0; q < n; ++q) {
            make_room(in.initial_placement[q], 0, /*emit=*/false, /*scan_from=*/0);
            loc[q] = in.initial_placement[q];
            ++residents[loc[q]];
        }
        out.initial_placement = loc;

        for (cursor = 0; cursor < in.events.size(); ++cursor) {
            const DistEvent& e = in.events[cursor];
            if (e.kind == DistEvent::Kind::Teleport) {
                if (loc[e.qubit] == e.qpu_b) continue;  // eviction already moved it there
                make_room(e.qpu_b, e.time, /*emit=*/true, cursor + 1);
                out.events.push_back(
                    {DistEvent::Kind::Teleport, e.time, -1, e.qubit, loc[e.qubit], e.qpu_b});
                ++out.ledger.teleports;
                --residents[loc[e.qubit]];
                loc[e.qubit] = e.qpu_b;
                ++residents[e.qpu_b];
                last_use[e.qubit] = static_cast<int>(cursor);
                continue;
            }
            const Gate& g = in.source.gate(e.gate_seq);
            for (int q : g.qubits()) last_use[q] = static_cast<int>(cursor);
            if (g.is_cnot() && loc[g.control] != loc[g.target]) {
                out.events.push_back({DistEvent::Kind::NonlocalCnot, e.time, e.gate_seq, -1,
                                      loc[g.control], loc[g.target]});
                ++out.ledger.nonlocal_cnots;
            } else {
                out.events.push_back(
                    {DistEvent::Kind::LocalGate, e.time, e.gate_seq, -1, -1, -1});
            }
        }
        return std::move(out);
    }
};

}  // namespace

DistributedCircuit post_process(const DistributedCircuit& d, const QpuCaps& caps) {
    if (static_cast<int>(caps.caps.size()) != d.num_qpus) {
        throw std::invalid_argument("cap list does not match QPU count");
    }
    for (int cap : caps.caps) {
        if (cap < 1) throw std::invalid_argument("every QPU cap must be at least 1");
    }
    if (caps.total() < d.source.num_qubits()) {
        throw std::invalid_argument("total capacity below qubit count");
    }
    PostProcessor pp(d, caps);
    return pp.run();
}

EbitReport ebit_report(const DistributedCircuit& d) {
    EbitReport r;
    r.nonlocal_cnots = d.ledger.nonlocal_cnots;
    r.teleports = d.ledger.teleports;
    r.total = d.ledger.total();

    std::vector<int> residents(d.num_qpus, 0);
    for (int q = 0; q < d.source.num_qubits(); ++q) {
        ++residents[d.initial_placement[q]];
    }
    int peak = residents.empty() ? 0 : *std::max_element(residents.begin(), residents.end());
    std::vector<int> loc = d.initial_placement;
    for (const DistEvent& e : d.events) {
        if (e.kind != DistEvent::Kind::Teleport) continue;
        --residents[loc[e.qubit]];
        loc[e.qubit] = e.qpu_b;
        ++residents[e.qpu_b];
        peak = std::max(peak, residents[e.qpu_b]);
    }
    r.max_qubits_per_node = peak;
    return r;
}

void validate(const DistributedCircuit& d, const QpuCaps* caps) {
    int n = d.source.num_qubits();
    if (static_cast<int>(d.initial_placement.size()) != n) {
        throw std::logic_error("initial placement size mismatch");
    }
    std::vector<int> loc = d.initial_placement;
    std::vector<int> residents(d.num_qpus, 0);
    for (int q = 0; q < n; ++q) {
        if (loc[q] < 0 || loc[q] >= d.num_qpus) throw std::logic_error("placement out of range");
        ++residents[loc[q]];
    }
    auto check_caps = [&]() {
        if (!caps) return;
        for (int x = 0; x < d.num_qpus; ++x) {
            if (residents[x] > caps->caps[x]) {
                throw std::logic_error("cap violated on qpu " + std::to_string(x));
            }
        }
    };
    check_caps();

    std::int64_t nonlocal = 0, teleports = 0;
    int next_seq = 0;
    for (const DistEvent& e : d.events) {
        switch (e.kind) {
            case DistEvent::Kind::Teleport: {
                if (e.qpu_a == e.qpu_b) throw std::logic_error("teleport to same qpu");
                if (loc[e.qubit] != e.qpu_a) throw std::logic_error("teleport source mismatch");
                --residents[e.qpu_a];
                loc[e.qubit] = e.qpu_b;
                ++residents[e.qpu_b];
                ++teleports;
                check_caps();
                break;
            }
            case DistEvent::Kind::LocalGate: {
                if (e.gate_seq != next_seq++) throw std::logic_error("gate order broken");
                const Gate& g = d.source.gate(e.gate_seq);
                if (g.is_cnot() && loc[g.control] != loc[g.target]) {
                    throw std::logic_error("local gate with separated operands");
                }
                break;
            }
            case DistEvent::Kind::NonlocalCnot: {
                if (e.gate_seq != next_seq++) throw std::logic_error("gate order broken");
                const Gate& g = d.source.gate(e.gate_seq);
                if (!g.is_cnot()) throw std::logic_error("nonlocal event on a 1q gate");
                if (loc[g.control] == loc[g.target]) {
                    throw std::logic_error("nonlocal cnot with co-located operands");
                }
                if (loc[g.control] != e.qpu_a || loc[g.target] != e.qpu_b) {
                    throw std::logic_error("nonlocal cnot endpoint mismatch");
                }
                ++nonlocal;
                break;
            }
        }
    }
    if (next_seq != static_cast<int>(d.source.size())) {
        throw std::logic_error("missing gate events");
    }
    if (nonlocal != d.ledger.nonlocal_cnots || teleports != d.ledger.teleports) {
        throw std::logic_error("ledger does not match event stream");
    }
}

}  // namespace dqc
