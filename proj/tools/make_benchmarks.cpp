// Regenerates the benchmark corpus under benchmarks/. The circuits are
// synthetic stand-ins with pinned qubit/CNOT totals (see benchmarks/README.md
// and manifest.json); structures follow the named algorithm family so the
// interaction graphs partition the way real instances do.

#include "dqc/circuit.hpp"
#include "dqc/generate.hpp"
#include "dqc/qasm.hpp"
#include "dqc/serialize.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace dqc;

void add_toffoli(Circuit& c, int a, int b, int t) {
    using Op = OneQubitOp;
    c.add(Gate::one_qubit(Op::H, t));
    c.add(Gate::cnot(b, t));
    c.add(Gate::one_qubit(Op::Tdg, t));
    c.add(Gate::cnot(a, t));
    c.add(Gate::one_qubit(Op::T, t));
    c.add(Gate::cnot(b, t));
    c.add(Gate::one_qubit(Op::Tdg, t));
    c.add(Gate::cnot(a, t));
    c.add(Gate::one_qubit(Op::T, b));
    c.add(Gate::one_qubit(Op::T, t));
    c.add(Gate::one_qubit(Op::H, t));
    c.add(Gate::cnot(a, b));
    c.add(Gate::one_qubit(Op::T, a));
    c.add(Gate::one_qubit(Op::Tdg, b));
    c.add(Gate::cnot(a, b));
}

void add_cphase(Circuit& c, double lambda, int a, int b) {
    c.add(Gate::one_qubit(OneQubitOp::U1, a, {lambda / 2}));
    c.add(Gate::cnot(a, b));
    c.add(Gate::one_qubit(OneQubitOp::U1, b, {-lambda / 2}));
    c.add(Gate::cnot(a, b));
    c.add(Gate::one_qubit(OneQubitOp::U1, b, {lambda / 2}));
}

// Tops the circuit up to an exact CNOT total with controlled-phase blocks
// (2 CNOTs) over the given pairs, plus one bare CNOT if the parity needs it.
void pad_to(Circuit& c, int target_cnots, const std::vector<std::pair<int, int>>& pairs) {
    std::size_t i = 0;
    while (c.cnot_count() + 2 <= target_cnots) {
        auto [a, b] = pairs[i % pairs.size()];
        add_cphase(c, M_PI / 4, a, b);
        ++i;
    }
    if (c.cnot_count() < target_cnots) {
        auto [a, b] = pairs[0];
        c.add(Gate::cnot(a, b));
    }
}

std::vector<std::pair<int, int>> neighbor_pairs(int lo, int hi) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = lo; i + 1 <= hi; ++i) pairs.push_back({i, i + 1});
    return pairs;
}

// Grover-style search: oracle and diffusion each built from a Toffoli over
// one half of the register. 12 CNOTs per iteration, 4 iterations.
Circuit make_grover_5() {
    Circuit c(5, "grover_5");
    for (int q = 0; q < 5; ++q) c.add(Gate::one_qubit(OneQubitOp::H, q));
    for (int it = 0; it < 4; ++it) {
        add_toffoli(c, 0, 1, 2);  // oracle mark
        for (int q = 2; q < 5; ++q) c.add(Gate::one_qubit(OneQubitOp::X, q));
        add_toffoli(c, 2, 3, 4);  // diffusion reflection
        for (int q = 2; q < 5; ++q) c.add(Gate::one_qubit(OneQubitOp::X, q));
        for (int q = 0; q < 5; ++q) c.add(Gate::one_qubit(OneQubitOp::H, q));
    }
    return c;
}

// Ripple-carry adder shape: Toffoli majority chain over overlapping triples
// (carry propagation) with CNOT sum chains.
Circuit make_adder(int n, int target_cnots, const std::string& name) {
    Circuit c(n, name);
    while (true) {
        int before = c.cnot_count();
        for (int i = 0; i + 2 < n && c.cnot_count() + 6 <= target_cnots; i += 2) {
            add_toffoli(c, i, i + 1, i + 2);
        }
        for (int i = 0; i + 1 < n && c.cnot_count() + 1 <= target_cnots; ++i) {
            c.add(Gate::cnot(i, i + 1));
        }
        if (c.cnot_count() == before || target_cnots - c.cnot_count() < 8) break;
    }
    pad_to(c, target_cnots, neighbor_pairs(0, n - 1));
    return c;
}

Circuit make_qft(int n, int target_cnots, const std::string& name) {
    Circuit c = gen_qft(n);
    c.set_name(name);
    pad_to(c, target_cnots, neighbor_pairs(0, n - 1));
    return c;
}

// Shift-and-add multiplier shape on 10 qubits: a 2-qubit multiplier register
// coupled into an 8-qubit accumulator ladder. The register/accumulator cut
// is deliberately light, as in real instances where few qubits drive many.
Circuit make_multiplier_10() {
    Circuit c(10, "multiplier_10");
    for (int q = 0; q < 2; ++q) c.add(Gate::one_qubit(OneQubitOp::H, q));
    int cross = 0;
    int a_internal = 0;
    for (int round = 0; round < 7; ++round) {
        // controlled additions into the accumulator
        for (int i = 2; i + 2 < 10; i += 2) add_toffoli(c, i, i + 1, i + 2);
        if (cross < 13) {
            c.add(Gate::cnot(1, 2));
            ++cross;
        }
        if (cross >= 13 && cross < 21) {
            c.add(Gate::cnot(0, 2));
            ++cross;
        }
        if (a_internal < 25) {
            c.add(Gate::cnot(0, 1));
            c.add(Gate::one_qubit(OneQubitOp::T, 1));
            c.add(Gate::cnot(0, 1));
            a_internal += 2;
        }
    }
    while (cross < 21) {
        c.add(Gate::cnot(0, 2));
        ++cross;
    }
    while (a_internal < 25) {
        c.add(Gate::cnot(0, 1));
        ++a_internal;
    }
    pad_to(c, 216, neighbor_pairs(2, 9));
    return c;
}

// 60-qubit multiplier shape: four 15-qubit partial-product banks with light
// carry bridges between consecutive banks.
Circuit make_multiplier_60() {
    Circuit c(60, "multiplier_60");
    constexpr int kTarget = 11405;
    for (int q = 0; q < 60; q += 15) c.add(Gate::one_qubit(OneQubitOp::H, q));
    for (int pass = 0; pass < 30; ++pass) {
        for (int b = 0; b < 4; ++b) {
            int lo = 15 * b;
            for (int i = lo; i + 2 < lo + 15; ++i) add_toffoli(c, i, i + 1, i + 2);
        }
    }
    for (int rep = 0; rep < 15; ++rep) {
        for (int b = 0; b < 3; ++b) c.add(Gate::cnot(15 * b + 14, 15 * b + 15));
    }
    std::vector<std::pair<int, int>> intra;
    for (int b = 0; b < 4; ++b) {
        auto block = neighbor_pairs(15 * b, 15 * b + 14);
        intra.insert(intra.end(), block.begin(), block.end());
    }
    pad_to(c, kTarget, intra);
    return c;
}

// Three qubits with pairwise interactions grouped so the first half of the
// circuit works pairs (0,1) and the second half pairs (0,2) then (1,2);
// used by the lowering examples and the verification walkthroughs.
Circuit make_triangle_3() {
    Circuit c(3, "triangle_3");
    c.add(Gate::one_qubit(OneQubitOp::H, 0));
    c.add(Gate::one_qubit(OneQubitOp::H, 2));
    c.add(Gate::cnot(0, 1));
    c.add(Gate::cnot(0, 1));
    c.add(Gate::cnot(0, 2));
    c.add(Gate::cnot(0, 2));
    c.add(Gate::cnot(1, 2));
    c.add(Gate::cnot(1, 2));
    return c;
}

void write_circuit(const std::filesystem::path& dir, const Circuit& c) {
    std::ofstream out(dir / (c.name() + ".qasm"));
    if (!out) throw std::runtime_error("cannot write fixture " + c.name());
    out << emit_qasm(c);
}

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "benchmarks";
    std::filesystem::create_directories(dir / "small");

    Circuit tfim = gen_tfim(7, 40);
    tfim.set_name("tfim_40_7");
    std::vector<Circuit> table = {
        make_grover_5(),
        std::move(tfim),
        make_adder(9, 98, "adder_9"),
        make_qft(10, 163, "qft_10"),
        make_multiplier_10(),
        make_multiplier_60(),
        make_adder(63, 1405, "adder_63"),
        make_qft(64, 5552, "qft_64"),
    };

    Json manifest = Json::array();
    for (const Circuit& c : table) {
        write_circuit(dir, c);
        manifest.push_back(Json{{"file", c.name() + ".qasm"},
                                {"name", c.name()},
                                {"qubits", c.num_qubits()},
                                {"cnots", c.cnot_count()}});
        std::cout << c.name() << ": " << c.num_qubits() << " qubits, " << c.cnot_count()
                  << " cnots\n";
    }
    std::ofstream mf(dir / "manifest.json");
    mf << manifest.dump(2) << "\n";

    Circuit qft4 = gen_qft(4);
    qft4.set_name("qft_4");
    Circuit tfim4 = gen_tfim(4, 1);
    tfim4.set_name("tfim_1_4");
    write_circuit(dir / "small", qft4);
    write_circuit(dir / "small", tfim4);
    write_circuit(dir / "small", make_triangle_3());
    return 0;
}
