#include "dqc/simulate.hpp"

#include <cmath>
#include <stdexcept>

namespace dqc {

namespace {

using cd = std::complex<double>;

constexpr double kBranchTol = 1e-12;

void one_qubit_matrix(const Gate& g, cd m[2][2]) {
    const double isq = 1.0 / std::sqrt(2.0);
    auto ei = [](double t) { return cd(std::cos(t), std::sin(t)); };
    switch (g.op) {
        case OneQubitOp::U3:
        case OneQubitOp::U2: {
            double theta = g.op == OneQubitOp::U2 ? M_PI / 2 : g.params[0];
            double phi = g.op == OneQubitOp::U2 ? g.params[0] : g.params[1];
            double lambda = g.op == OneQubitOp::U2 ? g.params[1] : g.params[2];
            m[0][0] = std::cos(theta / 2);
            m[0][1] = -ei(lambda) * std::sin(theta / 2);
            m[1][0] = ei(phi) * std::sin(theta / 2);
            m[1][1] = ei(phi + lambda) * std::cos(theta / 2);
            return;
        }
        case OneQubitOp::U1:
            m[0][0] = 1;
            m[0][1] = m[1][0] = 0;
            m[1][1] = ei(g.params[0]);
            return;
        case OneQubitOp::Rx: {
            double t = g.params[0] / 2;
            m[0][0] = m[1][1] = std::cos(t);
            m[0][1] = m[1][0] = cd(0, -std::sin(t));
            return;
        }
        case OneQubitOp::Ry: {
            double t = g.params[0] / 2;
            m[0][0] = m[1][1] = std::cos(t);
            m[0][1] = -std::sin(t);
            m[1][0] = std::sin(t);
            return;
        }
        case OneQubitOp::Rz: {
            double t = g.params[0] / 2;
            m[0][0] = ei(-t);
            m[0][1] = m[1][0] = 0;
            m[1][1] = ei(t);
            return;
        }
        case OneQubitOp::H:
            m[0][0] = m[0][1] = m[1][0] = isq;
            m[1][1] = -isq;
            return;
        case OneQubitOp::X:
            m[0][0] = m[1][1] = 0;
            m[0][1] = m[1][0] = 1;
            return;
        case OneQubitOp::Y:
            m[0][0] = m[1][1] = 0;
            m[0][1] = cd(0, -1);
            m[1][0] = cd(0, 1);
            return;
        case OneQubitOp::Z:
            m[0][0] = 1;
            m[0][1] = m[1][0] = 0;
            m[1][1] = -1;
            return;
        case OneQubitOp::S:
            m[0][0] = 1;
            m[0][1] = m[1][0] = 0;
            m[1][1] = cd(0, 1);
            return;
        case OneQubitOp::Sdg:
            m[0][0] = 1;
            m[0][1] = m[1][0] = 0;
            m[1][1] = cd(0, -1);
            return;
        case OneQubitOp::T:
            m[0][0] = 1;
            m[0][1] = m[1][0] = 0;
            m[1][1] = ei(M_PI / 4);
            return;
        case OneQubitOp::Tdg:
            m[0][0] = 1;
            m[0][1] = m[1][0] = 0;
            m[1][1] = ei(-M_PI / 4);
            return;
        case OneQubitOp::Id:
            m[0][0] = m[1][1] = 1;
            m[0][1] = m[1][0] = 0;
            return;
    }
    throw std::logic_error("unhandled gate");
}

}  // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 0 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("statevector supports 0.." + std::to_string(kMaxQubits) +
                                    " qubits");
    }
    amps_.assign(std::size_t{1} << num_qubits, cd(0, 0));
    amps_[0] = 1;
}

StateVector StateVector::from_amplitudes(int num_qubits, std::vector<cd> amps) {
    StateVector s(num_qubits);
    if (amps.size() != s.amps_.size()) {
        throw std::invalid_argument("amplitude count does not match qubit count");
    }
    s.amps_ = std::move(amps);
    if (std::abs(s.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("state is not normalized");
    }
    return s;
}

void StateVector::check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw std::out_of_range("qubit index out of range");
    }
}

void StateVector::apply_gate(const Gate& g) {
    if (g.is_cnot()) {
        apply_cnot(g.control, g.target);
    } else {
        cd m[2][2];
        one_qubit_matrix(g, m);
        apply_one_qubit(g.target, m);
    }
}

void StateVector::apply_one_qubit(int qubit, const cd m[2][2]) {
    check_qubit(qubit);
    const std::size_t stride = std::size_t{1} << qubit;
    for (std::size_t base = 0; base < amps_.size(); base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            cd a0 = amps_[i];
            cd a1 = amps_[i + stride];
            amps_[i] = m[0][0] * a0 + m[0][1] * a1;
            amps_[i + stride] = m[1][0] * a0 + m[1][1] * a1;
        }
    }
}

void StateVector::apply_cnot(int control, int target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) throw std::invalid_argument("cnot operands must differ");
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & cbit) && !(i & tbit)) {
            std::swap(amps_[i], amps_[i | tbit]);
        }
    }
}

double StateVector::norm() const {
    double n = 0;
    for (const cd& a : amps_) n += std::norm(a);
    return std::sqrt(n);
}

cd StateVector::overlap(const StateVector& other) const {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("overlap of different-sized states");
    }
    cd v(0, 0);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        v += std::conj(amps_[i]) * other.amps_[i];
    }
    return v;
}

double StateVector::prob_one(int qubit) const {
    check_qubit(qubit);
    const std::size_t bit = std::size_t{1} << qubit;
    double p = 0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) p += std::norm(amps_[i]);
    }
    return p;
}

double StateVector::force_measure(int qubit, int outcome) {
    check_qubit(qubit);
    double p1 = prob_one(qubit);
    double p = outcome ? p1 : 1.0 - p1;
    if (p < kBranchTol) {
        throw std::runtime_error("forced measurement branch has zero probability");
    }
    const std::size_t bit = std::size_t{1} << qubit;
    const double scale = 1.0 / std::sqrt(p);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        bool is_one = (i & bit) != 0;
        if (is_one != static_cast<bool>(outcome)) {
            amps_[i] = 0;
        } else {
            amps_[i] *= scale;
        }
    }
    return p;
}

int StateVector::measure(int qubit, Rng& rng) {
    double p1 = prob_one(qubit);
    int outcome = rng.next_double() < p1 ? 1 : 0;
    force_measure(qubit, outcome);
    return outcome;
}

StateVector StateVector::tensor(const StateVector& low, const StateVector& high) {
    StateVector out(low.num_qubits_ + high.num_qubits_);
    const std::size_t low_dim = low.amps_.size();
    for (std::size_t h = 0; h < high.amps_.size(); ++h) {
        for (std::size_t l = 0; l < low_dim; ++l) {
            out.amps_[h * low_dim + l] = high.amps_[h] * low.amps_[l];
        }
    }
    return out;
}

StateVector random_one_qubit_state(Rng& rng) {
    // Haar measure on the Bloch sphere.
    double theta = std::acos(1.0 - 2.0 * rng.next_double());
    double phi = 2.0 * M_PI * rng.next_double();
    StateVector s(1);
    Gate u = Gate::one_qubit(OneQubitOp::U3, 0, {theta, phi, 0.0});
    s.apply_gate(u);
    return s;
}

StateVector random_state(int num_qubits, Rng& rng) {
    std::vector<cd> amps(std::size_t{1} << num_qubits);
    double norm2 = 0;
    for (auto& a : amps) {
        // Box-Muller Gaussian pairs give a Haar-uniform direction.
        double u1 = rng.next_double();
        double u2 = rng.next_double();
        double r = std::sqrt(-2.0 * std::log(std::max(u1, 1e-300)));
        a = cd(r * std::cos(2 * M_PI * u2), r * std::sin(2 * M_PI * u2));
        norm2 += std::norm(a);
    }
    double scale = 1.0 / std::sqrt(norm2);
    for (auto& a : amps) a *= scale;
    return StateVector::from_amplitudes(num_qubits, std::move(amps));
}

namespace {

void prepare_bell(StateVector& s, int a, int b) {
    s.apply_gate(Gate::one_qubit(OneQubitOp::H, a));
    s.apply_cnot(a, b);
}

// Infidelity of two pure states via the Lagrange identity
//   ||a||^2 ||b||^2 - |<a|b>|^2 = sum_{i<j} |a_i b_j - a_j b_i|^2,
// a sum of squares with no cancellation. Computing 1 - |<a|b>|^2 directly
// bottoms out at sqrt(eps) once the sqrt is taken; this form keeps the
// resolution at the true angular error (~1e-16 for equal states). O(dim^2),
// fine at oracle sizes.
double pure_infidelity(const StateVector& a, const StateVector& b) {
    const auto& A = a.amplitudes();
    const auto& B = b.amplitudes();
    long double num = 0.0L;
    for (std::size_t i = 0; i < A.size(); ++i) {
        for (std::size_t j = i + 1; j < A.size(); ++j) {
            num += std::norm(A[i] * B[j] - A[j] * B[i]);
        }
    }
    long double na = 0.0L, nb = 0.0L;
    for (const auto& v : A) na += std::norm(v);
    for (const auto& v : B) nb += std::norm(v);
    return static_cast<double>(num / (na * nb));
}

double pure_trace_distance(const StateVector& a, const StateVector& b) {
    return std::sqrt(std::max(0.0, pure_infidelity(a, b)));
}

StateVector basis_state(int num_qubits, std::size_t index) {
    std::vector<cd> amps(std::size_t{1} << num_qubits, cd(0, 0));
    amps[index] = 1;
    return StateVector::from_amplitudes(num_qubits, std::move(amps));
}

// Places a 2-qubit state's amplitudes onto qubits (qa, qb) of a larger
// register whose remaining qubits are |0> (or the given basis bits).
StateVector scatter_two_qubit(int num_qubits, const StateVector& two, int qa, int qb,
                              std::size_t fixed_bits = 0) {
    std::vector<cd> amps(std::size_t{1} << num_qubits, cd(0, 0));
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            amps[fixed_bits | (a << qa) | (b << qb)] = two.amplitudes()[a | (b << 1)];
        }
    }
    return StateVector::from_amplitudes(num_qubits, std::move(amps));
}

}  // namespace

double verify_state_teleportation(int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    Rng rng(seed);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        StateVector input = random_one_qubit_state(rng);
        for (int m0 = 0; m0 < 2; ++m0) {
            for (int m1 = 0; m1 < 2; ++m1) {
                // Qubits: 0 = source, 1 = local Bell half, 2 = remote half.
                StateVector s = StateVector::tensor(input, StateVector(2));
                prepare_bell(s, 1, 2);
                s.apply_cnot(0, 1);
                s.apply_gate(Gate::one_qubit(OneQubitOp::H, 0));
                s.force_measure(0, m0);
                s.force_measure(1, m1);
                if (m1) s.apply_gate(Gate::one_qubit(OneQubitOp::X, 2));
                if (m0) s.apply_gate(Gate::one_qubit(OneQubitOp::Z, 2));

                // Expected: |m0>|m1> (x) input on qubit 2.
                StateVector expected =
                    StateVector::tensor(basis_state(2, static_cast<std::size_t>(m0) |
                                                           (static_cast<std::size_t>(m1) << 1)),
                                        input);
                worst = std::max(worst, pure_infidelity(s, expected));
            }
        }
    }
    return worst;
}

double verify_nonlocal_cnot(int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    Rng rng(seed);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        // Qubits: 0 = control data, 1/2 = Bell halves, 3 = target data.
        // The two-qubit input (possibly entangled) lives on qubits 0 and 3.
        StateVector input = random_state(2, rng);
        for (int m1 = 0; m1 < 2; ++m1) {
            for (int m2 = 0; m2 < 2; ++m2) {
                StateVector s = scatter_two_qubit(4, input, 0, 3);
                prepare_bell(s, 1, 2);
                s.apply_cnot(0, 1);
                s.apply_cnot(2, 3);
                s.force_measure(1, m1);
                if (m1) s.apply_gate(Gate::one_qubit(OneQubitOp::X, 3));
                s.apply_gate(Gate::one_qubit(OneQubitOp::H, 2));
                s.force_measure(2, m2);
                if (m2) s.apply_gate(Gate::one_qubit(OneQubitOp::Z, 0));

                StateVector expected_data = input;
                expected_data.apply_cnot(0, 1);  // reference CNOT on the 2q input
                std::size_t ancilla_bits = (static_cast<std::size_t>(m1) << 1) |
                                           (static_cast<std::size_t>(m2) << 2);
                StateVector expected = scatter_two_qubit(4, expected_data, 0, 3, ancilla_bits);
                worst = std::max(worst, pure_trace_distance(s, expected));
            }
        }
    }
    return worst;
}

namespace {

// Supplies measurement outcomes: either from a fixed branch vector or Born
// sampling.
struct OutcomeSource {
    const std::vector<int>* forced = nullptr;
    std::size_t next = 0;
    Rng* rng = nullptr;

    int get(StateVector& s, int qubit) {
        if (forced) {
            int m = (*forced)[next++];
            s.force_measure(qubit, m);
            return m;
        }
        return s.measure(qubit, *rng);
    }
};

// Runs the distributed event stream with ideal Bell pairs on two ancillas.
// Returns trace distance of the final state from reference (x) |00>.
double run_distributed_branch(const DistributedCircuit& d, const StateVector& input,
                              const StateVector& reference, OutcomeSource& outcomes) {
    const int n = d.source.num_qubits();
    const int e1 = n, e2 = n + 1;
    StateVector s = StateVector::tensor(input, StateVector(2));

    for (const DistEvent& e : d.events) {
        switch (e.kind) {
            case DistEvent::Kind::LocalGate:
                s.apply_gate(d.source.gate(e.gate_seq));
                break;
            case DistEvent::Kind::NonlocalCnot: {
                const Gate& g = d.source.gate(e.gate_seq);
                prepare_bell(s, e1, e2);
                s.apply_cnot(g.control, e1);
                s.apply_cnot(e2, g.target);
                int m1 = outcomes.get(s, e1);
                if (m1) s.apply_gate(Gate::one_qubit(OneQubitOp::X, g.target));
                s.apply_gate(Gate::one_qubit(OneQubitOp::H, e2));
                int m2 = outcomes.get(s, e2);
                if (m2) s.apply_gate(Gate::one_qubit(OneQubitOp::Z, g.control));
                // Reset ancillas for reuse.
                if (m1) s.apply_gate(Gate::one_qubit(OneQubitOp::X, e1));
                if (m2) s.apply_gate(Gate::one_qubit(OneQubitOp::X, e2));
                break;
            }
            case DistEvent::Kind::Teleport: {
                int q = e.qubit;
                prepare_bell(s, e1, e2);
                s.apply_cnot(q, e1);
                s.apply_gate(Gate::one_qubit(OneQubitOp::H, q));
                int m0 = outcomes.get(s, q);
                int m1 = outcomes.get(s, e1);
                if (m1) s.apply_gate(Gate::one_qubit(OneQubitOp::X, e2));
                if (m0) s.apply_gate(Gate::one_qubit(OneQubitOp::Z, e2));
                // e2 now holds the state; swap it back into slot q and clear
                // the ancillas.
                if (m0) s.apply_gate(Gate::one_qubit(OneQubitOp::X, q));
                if (m1) s.apply_gate(Gate::one_qubit(OneQubitOp::X, e1));
                s.apply_cnot(q, e2);
                s.apply_cnot(e2, q);
                s.apply_cnot(q, e2);
                break;
            }
        }
    }
    return pure_trace_distance(s, reference);
}

}  // namespace

double verify_distributed_equivalence(const Circuit& c, const DistributedCircuit& d,
                                      const EquivalenceOptions& opts) {
    if (c.num_qubits() + 2 > StateVector::kMaxQubits) {
        throw std::invalid_argument("circuit too large to verify (max " +
                                    std::to_string(StateVector::kMaxQubits - 2) +
                                    " data qubits)");
    }
    if (!(c == d.source)) {
        throw std::invalid_argument("distributed circuit does not match source");
    }

    int num_measurements = 0;
    for (const DistEvent& e : d.events) {
        if (e.kind != DistEvent::Kind::LocalGate) num_measurements += 2;
    }

    Rng rng(opts.seed);
    double worst = 0.0;
    for (int input_idx = 0; input_idx < opts.num_inputs; ++input_idx) {
        StateVector input(c.num_qubits());
        for (int q = 0; q < c.num_qubits(); ++q) {
            StateVector one = random_one_qubit_state(rng);
            cd m[2][2] = {{one.amplitudes()[0], -std::conj(one.amplitudes()[1])},
                          {one.amplitudes()[1], std::conj(one.amplitudes()[0])}};
            input.apply_one_qubit(q, m);
        }
        StateVector ref_data = input;
        for (const Gate& g : c.gates()) ref_data.apply_gate(g);
        StateVector reference = StateVector::tensor(ref_data, StateVector(2));

        if (num_measurements <= opts.enumerate_limit) {
            std::vector<int> branch(num_measurements, 0);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << num_measurements); ++mask) {
                for (int b = 0; b < num_measurements; ++b) branch[b] = (mask >> b) & 1;
                OutcomeSource outcomes{&branch, 0, nullptr};
                worst = std::max(worst, run_distributed_branch(d, input, reference, outcomes));
            }
        } else {
            for (int shot = 0; shot < opts.sampled_shots; ++shot) {
                OutcomeSource outcomes{nullptr, 0, &rng};
                worst = std::max(worst, run_distributed_branch(d, input, reference, outcomes));
            }
        }
    }
    return worst;
}

}  // namespace dqc
