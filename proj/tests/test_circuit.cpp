#include "dqc/circuit.hpp"
#include "dqc/generate.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace dqc;

TEST_CASE("gate constructors validate their arguments") {
    CHECK_THROWS_AS(Gate::cnot(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Gate::one_qubit(OneQubitOp::Rz, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Gate::one_qubit(OneQubitOp::H, 0, {1.0}), std::invalid_argument);
    CHECK(Gate::one_qubit(OneQubitOp::U3, 2, {0.1, 0.2, 0.3}).qubits() ==
          std::vector<int>{2});
    CHECK(Gate::cnot(0, 3).qubits() == std::vector<int>{0, 3});
}

TEST_CASE("circuit rejects out-of-range qubits and counts cnots") {
    Circuit c(2);
    c.add(Gate::cnot(0, 1));
    c.add(Gate::one_qubit(OneQubitOp::H, 0));
    CHECK_THROWS_AS(c.add(Gate::cnot(0, 2)), std::out_of_range);
    CHECK(c.cnot_count() == 1);
    CHECK(c.one_qubit_count() == 1);
}

TEST_CASE("per-qubit timelines") {
    SUBCASE("cnot appears in both operand timelines") {
        Circuit c(2);
        c.add(Gate::cnot(0, 1));
        c.add(Gate::one_qubit(OneQubitOp::H, 0));
        auto tl = per_qubit_timelines(c);
        CHECK(tl[0] == std::vector<int>{0, 1});
        CHECK(tl[1] == std::vector<int>{0});
    }
    SUBCASE("empty circuit gives empty timelines") {
        auto tl = per_qubit_timelines(Circuit(3));
        REQUIRE(tl.size() == 3);
        for (const auto& t : tl) CHECK(t.empty());
    }
    SUBCASE("total timeline length is one_qubit_count + 2 * cnot_count") {
        Rng rng(11);
        for (int trial = 0; trial < 20; ++trial) {
            Circuit c = test::random_circuit(2 + rng.next_int(6), 1 + rng.next_int(50), rng);
            auto tl = per_qubit_timelines(c);
            int total = 0;
            for (const auto& t : tl) total += static_cast<int>(t.size());
            CHECK(total == c.one_qubit_count() + 2 * c.cnot_count());
        }
    }
}

TEST_CASE("gen_qft structure") {
    SUBCASE("n=1 is a single hadamard") {
        Circuit c = gen_qft(1);
        CHECK(c.size() == 1);
        CHECK(c.cnot_count() == 0);
        CHECK(c.gates()[0].op == OneQubitOp::H);
    }
    SUBCASE("cnot counts follow n*(n-1) + 3*floor(n/2)") {
        CHECK(gen_qft(4).cnot_count() == 18);
        CHECK(gen_qft(10).cnot_count() == 105);
    }
    SUBCASE("n=0 rejected") { CHECK_THROWS_AS(gen_qft(0), std::invalid_argument); }
    SUBCASE("deterministic") { CHECK(gen_qft(5) == gen_qft(5)); }
}

TEST_CASE("gen_tfim structure") {
    CHECK(gen_tfim(7, 40).cnot_count() == 480);
    CHECK(gen_tfim(2, 1).cnot_count() == 2);
    CHECK(gen_tfim(5, 3).cnot_count() == 24);
    CHECK_THROWS_AS(gen_tfim(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(gen_tfim(3, 0), std::invalid_argument);

    // timeline lengths recount from the gate list
    Circuit c = gen_tfim(3, 1);
    auto tl = per_qubit_timelines(c);
    int total = 0;
    for (const auto& t : tl) total += static_cast<int>(t.size());
    CHECK(total == c.one_qubit_count() + 2 * c.cnot_count());
}
