#pragma once

#include "dqc/circuit.hpp"
#include "dqc/rng.hpp"

#include <string>

namespace dqc::test {

inline std::string benchmark_path(const std::string& file) {
    return std::string(DQC_BENCHMARK_DIR) + "/" + file;
}

/// Random circuit over the supported gate set; roughly 50% CNOTs.
inline Circuit random_circuit(int num_qubits, int num_gates, Rng& rng) {
    Circuit c(num_qubits, "random");
    for (int i = 0; i < num_gates; ++i) {
        if (num_qubits >= 2 && rng.next_int(2) == 0) {
            int a = rng.next_int(num_qubits);
            int b = rng.next_int(num_qubits - 1);
            if (b >= a) ++b;
            c.add(Gate::cnot(a, b));
        } else {
            switch (rng.next_int(4)) {
                case 0:
                    c.add(Gate::one_qubit(OneQubitOp::H, rng.next_int(num_qubits)));
                    break;
                case 1:
                    c.add(Gate::one_qubit(OneQubitOp::T, rng.next_int(num_qubits)));
                    break;
                case 2:
                    c.add(Gate::one_qubit(OneQubitOp::Rz, rng.next_int(num_qubits),
                                          {rng.next_double() * 3.0}));
                    break;
                default:
                    c.add(Gate::one_qubit(OneQubitOp::X, rng.next_int(num_qubits)));
                    break;
            }
        }
    }
    return c;
}

/// Three qubits, pairwise weight-2 interactions, ordered so a single
/// mid-circuit move of qubit 0 yields a 3 e-bit gate partitioning. Matches
/// benchmarks/small/triangle_3.qasm.
inline Circuit triangle_circuit() {
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

}  // namespace dqc::test
