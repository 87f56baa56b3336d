#pragma once

#include "dqc/circuit.hpp"

namespace dqc {

/// n-qubit quantum Fourier transform over the {u1, cx} basis. Controlled
/// phases are decomposed into 2 CNOTs each and the final reversal uses
/// 3-CNOT swaps, so cnot_count = n*(n-1) + 3*(n/2).
Circuit gen_qft(int n);

/// Trotterized transverse-field Ising evolution on a line of n qubits.
/// Each step applies a cx-rz-cx block per neighboring pair followed by an
/// rx layer, so cnot_count = 2*(n-1)*steps.
Circuit gen_tfim(int n, int steps);

}  // namespace dqc
