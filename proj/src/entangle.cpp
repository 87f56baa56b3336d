#include "dqc/entangle.hpp"

#include "dqc/rng.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace dqc {

namespace {

constexpr int kMaxRounds = 16;

void check_fidelity(double f, const char* what) {
    if (!(f > 0.25) || !(f <= 1.0)) {
        throw std::invalid_argument(std::string(what) + " must be in (0.25, 1], got " +
                                    std::to_string(f));
    }
}

}  // namespace

void LinkModel::check() const {
    check_fidelity(base_fidelity, "base fidelity");
    check_fidelity(target_fidelity, "target fidelity");
    if (!(attempt_period > 0)) throw std::invalid_argument("attempt_period must be positive");
    if (!(success_prob > 0) || success_prob > 1.0) {
        throw std::invalid_argument("success_prob must be in (0, 1]");
    }
    if (comm_qubits_per_node < 1) {
        throw std::invalid_argument("comm_qubits_per_node must be at least 1");
    }
    if (classical_rtt < 0) throw std::invalid_argument("classical_rtt must be non-negative");
}

PurifyResult purify_once(double fidelity) {
    check_fidelity(fidelity, "fidelity");
    double f = fidelity;
    double r = (1.0 - f) / 3.0;
    double denom = f * f + 2.0 * f * r + 5.0 * r * r;
    return {(f * f + r * r) / denom, denom};
}

PurificationPlan purification_plan(double base, double target) {
    check_fidelity(base, "base fidelity");
    check_fidelity(target, "target fidelity");
    PurificationPlan plan;
    double f = base;
    while (f < target) {
        if (plan.rounds == kMaxRounds) {
            throw std::invalid_argument("target fidelity " + std::to_string(target) +
                                        " unreachable from base " + std::to_string(base));
        }
        double next = purify_once(f).fidelity;
        if (next <= f) {
            throw std::invalid_argument("purification cannot improve fidelity " +
                                        std::to_string(f) + "; target unreachable");
        }
        f = next;
        ++plan.rounds;
    }
    plan.raw_pairs = std::int64_t{1} << plan.rounds;
    return plan;
}

TimeEstimate per_ebit_time(const LinkModel& m) {
    m.check();
    PurificationPlan plan = purification_plan(m.base_fidelity, m.target_fidelity);

    double raw_pair_time = m.attempt_period / m.success_prob;
    double slots = m.comm_qubits_per_node / 2.0;

    // Nested pumping: raw-pair demand doubles per round and inflates by each
    // round's failure rate.
    double expected_raw = 1.0;
    double f = m.base_fidelity;
    for (int round = 0; round < plan.rounds; ++round) {
        PurifyResult r = purify_once(f);
        expected_raw = 2.0 * expected_raw / r.success_prob;
        f = r.fidelity;
    }

    TimeEstimate t;
    t.purification_rounds = plan.rounds;
    t.raw_pairs_per_ebit = plan.raw_pairs;
    t.expected_raw_pairs = expected_raw;
    t.per_ebit_seconds = expected_raw * raw_pair_time / slots + plan.rounds * m.classical_rtt;
    t.total_seconds = t.per_ebit_seconds;
    t.comm_budget_exceeded = plan.raw_pairs > m.comm_qubits_per_node;
    return t;
}

TimeEstimate estimate_total_time(const LinkModel& m, std::int64_t ebits) {
    if (ebits < 0) throw std::invalid_argument("e-bit count must be non-negative");
    TimeEstimate t = per_ebit_time(m);
    t.total_seconds = static_cast<double>(ebits) * t.per_ebit_seconds;
    return t;
}

double mc_per_ebit_time(const LinkModel& m, int samples, std::uint64_t seed) {
    m.check();
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    PurificationPlan plan = purification_plan(m.base_fidelity, m.target_fidelity);
    double slots = m.comm_qubits_per_node / 2.0;

    std::vector<double> round_success(plan.rounds);
    double f = m.base_fidelity;
    for (int round = 0; round < plan.rounds; ++round) {
        PurifyResult r = purify_once(f);
        round_success[round] = r.success_prob;
        f = r.fidelity;
    }

    Rng rng(seed);
    auto geometric_attempts = [&]() {
        // Inverse-CDF sample of the attempt count (support 1, 2, ...).
        double u = rng.next_double();
        return 1.0 + std::floor(std::log1p(-u) / std::log1p(-m.success_prob));
    };
    // Time to deliver one pair purified to `level`; failed rounds cost their
    // elapsed time and are retried from scratch.
    auto produce = [&](auto&& self, int level) -> double {
        if (level == 0) return geometric_attempts() * m.attempt_period / slots;
        double elapsed = 0.0;
        while (true) {
            elapsed += self(self, level - 1) + self(self, level - 1) + m.classical_rtt;
            if (rng.next_double() < round_success[level - 1]) return elapsed;
        }
    };

    double total = 0.0;
    for (int i = 0; i < samples; ++i) {
        total += produce(produce, plan.rounds);
    }
    return total / samples;
}

}  // namespace dqc
