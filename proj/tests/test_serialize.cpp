#include "dqc/serialize.hpp"

#include "dqc/generate.hpp"
#include "dqc/graph.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace dqc;

TEST_CASE("circuit json round trip is bit-exact") {
    Rng rng(51);
    for (int trial = 0; trial < 15; ++trial) {
        Circuit c = test::random_circuit(1 + rng.next_int(5), rng.next_int(40), rng);
        Json j = circuit_to_json(c);
        // through text, as a file would go
        Circuit back = circuit_from_json(Json::parse(j.dump()));
        CHECK(back == c);
    }
    Circuit qft = gen_qft(5);
    CHECK(circuit_from_json(Json::parse(circuit_to_json(qft).dump())) == qft);
}

TEST_CASE("partitioning json") {
    WeightedGraph g(4);
    g.add_edge(0, 1, 2);
    g.add_edge(2, 3, 1);
    Partitioning p = make_partitioning(g, {0, 0, 1, 1}, 2);
    Json j = partitioning_to_json(p);
    CHECK(j["cut_weight"] == 0);
    Partitioning back = partitioning_from_json(j, g);
    CHECK(back.assignment == p.assignment);

    j["cut_weight"] = 99;  // stored value must match the graph
    CHECK_THROWS_AS(partitioning_from_json(j, g), std::invalid_argument);
}

TEST_CASE("distributed circuit json carries events and ledger") {
    Circuit c = test::triangle_circuit();
    WeightedGraph gg = build_gate_graph(c);
    std::vector<int> assignment(gg.num_nodes());
    for (int node = 0; node < gg.num_nodes(); ++node) {
        const NodeLabel& l = gg.labels[node];
        assignment[node] = l.qubit == 2 || (l.qubit == 0 && l.gate_seq > 3) ? 1 : 0;
    }
    DistributedCircuit d =
        lower_gate_partitioning(c, make_partitioning(gg, std::move(assignment), 2));
    Json j = distributed_to_json(d);
    CHECK(j["ledger"]["total"] == 3);
    int teleports = 0;
    for (const Json& e : j["events"]) {
        if (e["kind"] == "teleport") ++teleports;
    }
    CHECK(teleports == 1);
}

TEST_CASE("link model json round trip and validation") {
    LinkModel m;
    m.base_fidelity = 0.85;
    m.comm_qubits_per_node = 6;
    LinkModel back = link_model_from_json(link_model_to_json(m));
    CHECK(back.base_fidelity == m.base_fidelity);
    CHECK(back.comm_qubits_per_node == 6);

    Json bad = link_model_to_json(m);
    bad["success_prob"] = 0.0;
    CHECK_THROWS_AS(link_model_from_json(bad), std::invalid_argument);

    // partial configs keep defaults for missing keys
    LinkModel partial = link_model_from_json(Json{{"base_fidelity", 0.87}});
    CHECK(partial.base_fidelity == 0.87);
    CHECK(partial.attempt_period == LinkModel{}.attempt_period);
}
