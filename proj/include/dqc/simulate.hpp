#pragma once

#include "dqc/circuit.hpp"
#include "dqc/distribute.hpp"
#include "dqc/rng.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace dqc {

/// Dense statevector over up to 14 qubits. Qubit q is bit q of the amplitude
/// index. Used as the semantic oracle for teleportation lowerings; not built
/// for scale.
class StateVector {
public:
    static constexpr int kMaxQubits = 14;

    explicit StateVector(int num_qubits);  // starts in |0...0>

    /// Builds a state from explicit amplitudes (must have unit norm).
    static StateVector from_amplitudes(int num_qubits,
                                       std::vector<std::complex<double>> amps);

    int num_qubits() const { return num_qubits_; }
    const std::vector<std::complex<double>>& amplitudes() const { return amps_; }

    void apply_gate(const Gate& g);
    void apply_one_qubit(int qubit, const std::complex<double> m[2][2]);
    void apply_cnot(int control, int target);

    double norm() const;
    std::complex<double> overlap(const StateVector& other) const;

    double prob_one(int qubit) const;

    /// Collapses `qubit` to `outcome` and renormalizes; returns the branch
    /// probability. Throws if the branch has (numerically) zero probability.
    double force_measure(int qubit, int outcome);

    /// Born-sampled measurement.
    int measure(int qubit, Rng& rng);

    /// Kronecker product: the qubits of `rhs` become the high-order qubits.
    static StateVector tensor(const StateVector& low, const StateVector& high);

private:
    void check_qubit(int qubit) const;

    int num_qubits_;
    std::vector<std::complex<double>> amps_;
};

/// Haar-random single-qubit pure state.
StateVector random_one_qubit_state(Rng& rng);

/// Haar-random pure state on `num_qubits` qubits (Gaussian amplitudes).
StateVector random_state(int num_qubits, Rng& rng);

/// Checks the state-teleportation circuit on `trials` random inputs with all
/// four measurement branches enumerated; returns the maximum infidelity of
/// the delivered qubit against the input.
double verify_state_teleportation(int trials, std::uint64_t seed);

/// Checks the teleported-CNOT circuit on `trials` random (possibly entangled)
/// two-qubit inputs over all four measurement branches; returns the maximum
/// trace distance from the directly applied CNOT.
double verify_nonlocal_cnot(int trials, std::uint64_t seed);

struct EquivalenceOptions {
    int num_inputs = 20;
    std::uint64_t seed = 7;
    int enumerate_limit = 12;  // enumerate branches when #measurements <= limit
    int sampled_shots = 1000;
};

/// Simulates the distributed circuit with ideal Bell pairs (two reusable
/// communication ancillas) against the source circuit on random product
/// inputs; returns the maximum trace distance over all inputs and branches.
double verify_distributed_equivalence(const Circuit& c, const DistributedCircuit& d,
                                      const EquivalenceOptions& opts = {});

}  // namespace dqc
