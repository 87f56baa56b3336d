#include "dqc/entangle.hpp"

#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <stdexcept>

using namespace dqc;

namespace {

// Independent check values for the purification map at f = 0.85:
//   r = 0.05, f' = (0.7225 + 0.0025) / 0.82 = 0.884146...,  p = 0.82
constexpr double kF085Out = 0.725 / 0.82;
constexpr double kF085P = 0.82;

}  // namespace

TEST_CASE("purify_once") {
    SUBCASE("perfect pairs are a fixed point") {
        PurifyResult r = purify_once(1.0);
        CHECK(r.fidelity == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.success_prob == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("f = 0.85 frozen values") {
        PurifyResult r = purify_once(0.85);
        CHECK(r.fidelity == doctest::Approx(kF085Out).epsilon(1e-12));
        CHECK(r.success_prob == doctest::Approx(kF085P).epsilon(1e-12));
    }
    SUBCASE("f = 0.9 improves") { CHECK(purify_once(0.9).fidelity > 0.9); }
    SUBCASE("0.25 is the other fixed point") {
        CHECK(purify_once(0.2500000001).fidelity == doctest::Approx(0.25).epsilon(1e-6));
    }
    SUBCASE("strict improvement over (0.5, 1)") {
        for (int i = 1; i < 1000; ++i) {
            double f = 0.5 + 0.5 * i / 1000.0;
            CHECK(purify_once(f).fidelity > f);
        }
    }
    SUBCASE("domain") {
        CHECK_THROWS_AS(purify_once(0.25), std::invalid_argument);
        CHECK_THROWS_AS(purify_once(1.01), std::invalid_argument);
    }
}

TEST_CASE("purification_plan") {
    SUBCASE("no purification needed at base = target") {
        PurificationPlan p = purification_plan(0.9, 0.9);
        CHECK(p.rounds == 0);
        CHECK(p.raw_pairs == 1);
    }
    SUBCASE("0.85 to 0.9 takes two rounds / four raw pairs") {
        // one round: 0.8841 < 0.9; two rounds: 0.9134 >= 0.9
        PurificationPlan p = purification_plan(0.85, 0.9);
        CHECK(p.rounds == 2);
        CHECK(p.raw_pairs == 4);
    }
    SUBCASE("perfect base never purifies") {
        CHECK(purification_plan(1.0, 1.0).rounds == 0);
        CHECK(purification_plan(1.0, 0.7).rounds == 0);
    }
    SUBCASE("unreachable target throws") {
        CHECK_THROWS_AS(purification_plan(0.26, 0.999999999), std::invalid_argument);
    }
    SUBCASE("rounds monotone in base and target") {
        int prev = 100;
        for (double base : {0.6, 0.7, 0.8, 0.85, 0.9}) {
            int r = purification_plan(base, 0.9).rounds;
            CHECK(r <= prev);
            prev = r;
        }
        prev = -1;
        for (double target : {0.6, 0.7, 0.8, 0.85, 0.9}) {
            int r = purification_plan(0.6, target).rounds;
            CHECK(r >= prev);
            prev = r;
        }
    }
}

TEST_CASE("per_ebit_time") {
    LinkModel base;
    base.base_fidelity = 0.9;
    base.target_fidelity = 0.9;
    base.attempt_period = 10e-6;
    base.success_prob = 1e-3;
    base.comm_qubits_per_node = 2;
    base.classical_rtt = 500e-6;

    SUBCASE("zero rounds, one slot is the geometric expectation") {
        TimeEstimate t = per_ebit_time(base);
        CHECK(t.purification_rounds == 0);
        CHECK(t.per_ebit_seconds ==
              doctest::Approx(base.attempt_period / base.success_prob).epsilon(1e-12));
    }
    SUBCASE("purification makes the lower base fidelity strictly slower") {
        LinkModel worse = base;
        worse.base_fidelity = 0.85;
        CHECK(per_ebit_time(worse).per_ebit_seconds > per_ebit_time(base).per_ebit_seconds);
    }
    SUBCASE("doubling comm qubits halves the generation term") {
        LinkModel twice = base;
        twice.comm_qubits_per_node = 4;
        CHECK(per_ebit_time(twice).per_ebit_seconds ==
              doctest::Approx(per_ebit_time(base).per_ebit_seconds / 2).epsilon(1e-12));
    }
    SUBCASE("strictly decreasing in success_prob and comm qubits") {
        double prev = 1e100;
        for (double p : {1e-4, 3e-4, 1e-3, 3e-3, 1e-2}) {
            LinkModel m = base;
            m.success_prob = p;
            double t = per_ebit_time(m).per_ebit_seconds;
            CHECK(t < prev);
            prev = t;
        }
        prev = 1e100;
        for (int c : {1, 2, 3, 5, 8, 13}) {
            LinkModel m = base;
            m.comm_qubits_per_node = c;
            double t = per_ebit_time(m).per_ebit_seconds;
            CHECK(t < prev);
            prev = t;
        }
    }
    SUBCASE("comm budget warning when 2^rounds exceeds the budget") {
        LinkModel m = base;
        m.base_fidelity = 0.85;  // needs 4 raw pairs
        m.comm_qubits_per_node = 2;
        CHECK(per_ebit_time(m).comm_budget_exceeded);
        m.comm_qubits_per_node = 4;
        CHECK_FALSE(per_ebit_time(m).comm_budget_exceeded);
    }
}

TEST_CASE("estimate_total_time") {
    LinkModel m;
    m.base_fidelity = 0.85;
    m.target_fidelity = 0.9;
    SUBCASE("zero e-bits, zero time") {
        CHECK(estimate_total_time(m, 0).total_seconds == 0.0);
    }
    SUBCASE("linear in the e-bit count") {
        TimeEstimate one = estimate_total_time(m, 32);
        CHECK(one.total_seconds == doctest::Approx(32 * one.per_ebit_seconds).epsilon(1e-12));
        TimeEstimate twice = estimate_total_time(m, 64);
        CHECK(twice.total_seconds == doctest::Approx(2 * one.total_seconds).epsilon(1e-12));
    }
}

TEST_CASE("monte carlo mode is in the analytic ballpark") {
    LinkModel m;
    m.base_fidelity = 0.85;
    m.target_fidelity = 0.9;
    m.comm_qubits_per_node = 4;
    double analytic = per_ebit_time(m).per_ebit_seconds;
    double mc = mc_per_ebit_time(m, 4000, 123);
    // The sampler pays the classical round trip per retry, so it sits a bit
    // above the analytic expectation.
    CHECK(mc == doctest::Approx(analytic).epsilon(0.15));
    CHECK(mc >= analytic * 0.85);
    // deterministic for a fixed seed
    CHECK(mc == mc_per_ebit_time(m, 4000, 123));
}
