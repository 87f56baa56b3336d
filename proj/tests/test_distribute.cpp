#include "dqc/distribute.hpp"

#include "dqc/generate.hpp"
#include "dqc/graph.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace dqc;

namespace {

Partitioning triangle_qubit_split(const Circuit& c) {
    // {q0, q1} vs {q2}
    return make_partitioning(build_qubit_graph(c), {0, 0, 1}, 2);
}

// The gate-graph assignment behind the 3 e-bit lowering of the triangle
// circuit: q1 stays in part 0, q2 in part 1, q0 moves 0 -> 1 after gate 3.
Partitioning triangle_gate_split(const Circuit& c) {
    WeightedGraph gg = build_gate_graph(c);
    std::vector<int> assignment(gg.num_nodes());
    for (int node = 0; node < gg.num_nodes(); ++node) {
        const NodeLabel& l = gg.labels[node];
        if (l.qubit == 1) assignment[node] = 0;
        if (l.qubit == 2) assignment[node] = 1;
        if (l.qubit == 0) assignment[node] = l.gate_seq <= 3 ? 0 : 1;
    }
    return make_partitioning(gg, std::move(assignment), 2);
}

}  // namespace

TEST_CASE("qubit lowering") {
    SUBCASE("two qubits split, one cnot") {
        Circuit c(2);
        c.add(Gate::cnot(0, 1));
        Partitioning p = make_partitioning(build_qubit_graph(c), {0, 1}, 2);
        DistributedCircuit d = lower_qubit_partitioning(c, p);
        validate(d);
        CHECK(d.ledger.nonlocal_cnots == 1);
        CHECK(d.ledger.total() == 1);
    }
    SUBCASE("single partition keeps everything local") {
        Circuit c = gen_tfim(4, 2);
        Partitioning p = make_partitioning(build_qubit_graph(c), {0, 0, 0, 0}, 1);
        DistributedCircuit d = lower_qubit_partitioning(c, p);
        validate(d);
        CHECK(d.ledger.total() == 0);
        EbitReport r = ebit_report(d);
        CHECK(r.total == 0);
        CHECK(r.max_qubits_per_node == 4);
    }
    SUBCASE("triangle circuit: 2/1 qubit split costs 4 e-bits") {
        Circuit c = test::triangle_circuit();
        Partitioning p = triangle_qubit_split(c);
        CHECK(p.cut_weight == 4);
        // brute force confirms 4 is optimal for any 2/1 split
        CHECK(brute_force_partition(build_qubit_graph(c), 2, 1.0).cut_weight == 4);
        DistributedCircuit d = lower_qubit_partitioning(c, p);
        validate(d);
        EbitReport r = ebit_report(d);
        CHECK(r.total == 4);
        CHECK(r.nonlocal_cnots == 4);
        CHECK(r.teleports == 0);
        CHECK(r.max_qubits_per_node == 2);
    }
    SUBCASE("ledger equals cut weight on random circuits") {
        Rng rng(7);
        for (int trial = 0; trial < 20; ++trial) {
            int n = 2 + rng.next_int(6);
            Circuit c = test::random_circuit(n, rng.next_int(60), rng);
            Partitioning p = random_partition(build_qubit_graph(c), 2, rng.next_u64());
            DistributedCircuit d = lower_qubit_partitioning(c, p);
            validate(d);
            CHECK(d.ledger.total() == p.cut_weight);
            CHECK(ebit_report(d).max_qubits_per_node == p.max_part_size());
        }
    }
}

TEST_CASE("gate lowering") {
    SUBCASE("all gates in one partition, no e-bits") {
        Circuit c(1);
        c.add(Gate::one_qubit(OneQubitOp::H, 0));
        c.add(Gate::one_qubit(OneQubitOp::T, 0));
        WeightedGraph gg = build_gate_graph(c);
        Partitioning p = make_partitioning(gg, {0, 0}, 1);
        DistributedCircuit d = lower_gate_partitioning(c, p);
        validate(d);
        CHECK(d.ledger.total() == 0);
    }
    SUBCASE("two gates on one qubit split across partitions teleports once") {
        Circuit c(1);
        c.add(Gate::one_qubit(OneQubitOp::H, 0));
        c.add(Gate::one_qubit(OneQubitOp::T, 0));
        WeightedGraph gg = build_gate_graph(c);
        Partitioning p = make_partitioning(gg, {0, 1}, 2);
        DistributedCircuit d = lower_gate_partitioning(c, p);
        validate(d);
        CHECK(d.ledger.teleports == 1);
        CHECK(d.ledger.total() == 1);
    }
    SUBCASE("triangle circuit: one move, 2 nonlocal cnots + 1 teleport") {
        Circuit c = test::triangle_circuit();
        Partitioning p = triangle_gate_split(c);
        CHECK(p.cut_weight == 3);
        DistributedCircuit d = lower_gate_partitioning(c, p);
        validate(d);
        EbitReport r = ebit_report(d);
        CHECK(r.total == 3);
        CHECK(r.nonlocal_cnots == 2);
        CHECK(r.teleports == 1);
        CHECK(r.max_qubits_per_node == 2);
    }
    SUBCASE("ledger equals gate-graph cut weight on random circuits") {
        Rng rng(19);
        for (int trial = 0; trial < 20; ++trial) {
            int n = 2 + rng.next_int(5);
            Circuit c = test::random_circuit(n, 1 + rng.next_int(50), rng);
            WeightedGraph gg = build_gate_graph(c);
            if (gg.num_nodes() < 2) continue;
            Partitioning p = random_partition(gg, 2, rng.next_u64());
            DistributedCircuit d = lower_gate_partitioning(c, p);
            validate(d);
            CHECK(d.ledger.total() == p.cut_weight);
        }
    }
}

TEST_CASE("post_process") {
    SUBCASE("already within caps is unchanged") {
        Circuit c = test::triangle_circuit();
        DistributedCircuit d = lower_gate_partitioning(c, triangle_gate_split(c));
        QpuCaps caps{{3, 3}};
        DistributedCircuit after = post_process(d, caps);
        validate(after, &caps);
        CHECK(after.ledger.total() == d.ledger.total());
        CHECK(after.events.size() == d.events.size());
        CHECK(after.initial_placement == d.initial_placement);
    }
    SUBCASE("caps equal to qubit count are a no-op for any lowering") {
        Rng rng(23);
        for (int trial = 0; trial < 10; ++trial) {
            int n = 2 + rng.next_int(5);
            Circuit c = test::random_circuit(n, 1 + rng.next_int(40), rng);
            WeightedGraph gg = build_gate_graph(c);
            if (gg.num_nodes() < 2) continue;
            Partitioning p = random_partition(gg, 2, rng.next_u64());
            DistributedCircuit d = lower_gate_partitioning(c, p);
            QpuCaps caps{{n, n}};
            DistributedCircuit after = post_process(d, caps);
            CHECK(after.ledger.total() == d.ledger.total());
            CHECK(after.events.size() == d.events.size());
        }
    }
    SUBCASE("an overflowing teleport triggers exactly one eviction") {
        // Three qubits, caps (2,2). q2 starts alone on QPU 1 (its first gate
        // lives there) and the plan teleports it to QPU 0, which would hold
        // 3 qubits; exactly one eviction must follow and the later cx(0,1)
        // gets reclassified nonlocal.
        Circuit c(3);
        c.add(Gate::one_qubit(OneQubitOp::H, 2));
        c.add(Gate::cnot(0, 1));
        c.add(Gate::cnot(2, 1));  // q2's halves on QPU 0 -> planned teleport
        c.add(Gate::cnot(0, 1));
        WeightedGraph gg = build_gate_graph(c);
        std::vector<int> assignment(gg.num_nodes(), 0);
        for (int node = 0; node < gg.num_nodes(); ++node) {
            if (gg.labels[node].gate_seq == 0) assignment[node] = 1;  // the h on q2
        }
        Partitioning p = make_partitioning(gg, std::move(assignment), 2);
        DistributedCircuit d = lower_gate_partitioning(c, p);
        CHECK(d.ledger.teleports == 1);
        CHECK(d.ledger.nonlocal_cnots == 0);
        QpuCaps caps{{2, 2}};
        DistributedCircuit after = post_process(d, caps);
        validate(after, &caps);
        CHECK(after.ledger.teleports == 2);       // planned move + one eviction
        CHECK(after.ledger.nonlocal_cnots == 1);  // the final cx(0,1)
        CHECK(ebit_report(after).max_qubits_per_node == 2);
    }
    SUBCASE("property: caps ceil(0.75n) never violated, ledger conserved") {
        Rng rng(43);
        for (int trial = 0; trial < 60; ++trial) {
            int n = 2 + rng.next_int(7);
            Circuit c = test::random_circuit(n, 1 + rng.next_int(60), rng);
            WeightedGraph gg = build_gate_graph(c);
            if (gg.num_nodes() < 2) continue;
            Partitioning p = multilevel_partition(gg, {2, 1.3, rng.next_u64(), 8});
            DistributedCircuit d = lower_gate_partitioning(c, p);
            int cap = static_cast<int>(std::ceil(0.75 * n));
            QpuCaps caps{{cap, cap}};
            DistributedCircuit after = post_process(d, caps);
            validate(after, &caps);  // checks caps at every step + ledger
        }
    }
    SUBCASE("infeasible caps rejected") {
        Circuit c = test::triangle_circuit();
        DistributedCircuit d = lower_gate_partitioning(c, triangle_gate_split(c));
        CHECK_THROWS_AS(post_process(d, QpuCaps{{1, 1}}), std::invalid_argument);
        CHECK_THROWS_AS(post_process(d, QpuCaps{{2}}), std::invalid_argument);
    }
}

TEST_CASE("placement timeline reflects teleports") {
    Circuit c = test::triangle_circuit();
    DistributedCircuit d = lower_gate_partitioning(c, triangle_gate_split(c));
    auto tl = d.placement_timeline();
    CHECK(tl[0].size() == 2);  // initial + one move
    CHECK(tl[0][0] == std::pair<int, int>{0, 0});
    CHECK(tl[0][1].second == 1);
    CHECK(tl[1].size() == 1);
    CHECK(tl[2].size() == 1);
}
