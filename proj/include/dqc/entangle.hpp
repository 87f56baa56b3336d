#pragma once

#include <cstdint>

namespace dqc {

/// Physical parameters of one entanglement link between a pair of QPUs.
struct LinkModel {
    double base_fidelity = 0.9;       // heralded pair fidelity before purification
    double target_fidelity = 0.9;     // required fidelity for a usable e-bit
    double attempt_period = 10e-6;    // seconds per heralding attempt
    double success_prob = 1e-3;       // heralding success probability per attempt
    int comm_qubits_per_node = 4;     // qubits reserved for communication per QPU
    double classical_rtt = 500e-6;    // seconds per classical round trip

    void check() const;  // throws std::invalid_argument on a bad parameter
};

struct PurifyResult {
    double fidelity;
    double success_prob;
};

struct PurificationPlan {
    int rounds = 0;
    std::int64_t raw_pairs = 1;  // 2^rounds
};

struct TimeEstimate {
    double per_ebit_seconds = 0.0;
    double total_seconds = 0.0;
    int purification_rounds = 0;
    std::int64_t raw_pairs_per_ebit = 1;
    double expected_raw_pairs = 1.0;   // accounting for purification failures
    bool comm_budget_exceeded = false; // 2^rounds pairs would not fit the comm qubits
};

/// One round of two-to-one recurrence purification on Werner states
/// (the Bennett et al. map). Defined for fidelity in (0.25, 1]; strictly
/// improving for f in (0.5, 1), with fixed points at 0.25 and 1.
PurifyResult purify_once(double fidelity);

/// Minimal number of nested purification rounds taking `base` to >= `target`,
/// consuming 2^rounds raw pairs. Throws if 16 rounds do not suffice.
PurificationPlan purification_plan(double base, double target);

/// Expected wall time to deliver one purified e-bit: geometric heralding
/// attempts pipelined over comm_qubits_per_node / 2 generation slots, with
/// one classical round trip per purification round and failed rounds costing
/// regenerated raw pairs in expectation.
TimeEstimate per_ebit_time(const LinkModel& m);

/// Scales the per-e-bit estimate by the number of e-bits the circuit needs.
TimeEstimate estimate_total_time(const LinkModel& m, std::int64_t ebits);

/// Monte Carlo counterpart of per_ebit_time for variance checks: samples
/// geometric attempt counts and Bernoulli purification outcomes. Returns the
/// sample mean of the per-e-bit time over `samples` runs.
double mc_per_ebit_time(const LinkModel& m, int samples, std::uint64_t seed);

}  // namespace dqc
