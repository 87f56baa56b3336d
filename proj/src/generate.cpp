#include "dqc/generate.hpp"

#include <cmath>
#include <stdexcept>

namespace dqc {

namespace {

void add_cphase(Circuit& c, double lambda, int control, int target) {
    c.add(Gate::one_qubit(OneQubitOp::U1, control, {lambda / 2}));
    c.add(Gate::cnot(control, target));
    c.add(Gate::one_qubit(OneQubitOp::U1, target, {-lambda / 2}));
    c.add(Gate::cnot(control, target));
    c.add(Gate::one_qubit(OneQubitOp::U1, target, {lambda / 2}));
}

void add_swap(Circuit& c, int a, int b) {
    c.add(Gate::cnot(a, b));
    c.add(Gate::cnot(b, a));
    c.add(Gate::cnot(a, b));
}

}  // namespace

Circuit gen_qft(int n) {
    if (n < 1) {
        throw std::invalid_argument("gen_qft requires n >= 1");
    }
    Circuit c(n, "qft" + std::to_string(n));
    for (int i = 0; i < n; ++i) {
        c.add(Gate::one_qubit(OneQubitOp::H, i));
        for (int j = i + 1; j < n; ++j) {
            add_cphase(c, M_PI / std::pow(2.0, j - i), j, i);
        }
    }
    for (int i = 0; i < n / 2; ++i) {
        add_swap(c, i, n - 1 - i);
    }
    return c;
}

Circuit gen_tfim(int n, int steps) {
    if (n < 2 || steps < 1) {
        throw std::invalid_argument("gen_tfim requires n >= 2 and steps >= 1");
    }
    constexpr double kDt = 0.1;
    constexpr double kCoupling = 1.0;
    constexpr double kField = 1.0;
    Circuit c(n, "tfim" + std::to_string(steps) + "_" + std::to_string(n));
    for (int s = 0; s < steps; ++s) {
        for (int i = 0; i + 1 < n; ++i) {
            c.add(Gate::cnot(i, i + 1));
            c.add(Gate::one_qubit(OneQubitOp::Rz, i + 1, {2 * kCoupling * kDt}));
            c.add(Gate::cnot(i, i + 1));
        }
        for (int q = 0; q < n; ++q) {
            c.add(Gate::one_qubit(OneQubitOp::Rx, q, {2 * kField * kDt}));
        }
    }
    return c;
}

}  // namespace dqc
