#include "qeb/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "qeb/errors.hpp"

namespace qeb {

namespace {

constexpr double kNormTolerance = 1e-9;

// Plain real arithmetic: std::complex multiplication carries an Annex G
// NaN-recovery branch that defeats vectorization of the amplitude loops.
inline Complex mul(const Complex& a, const Complex& b) noexcept {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

Mat2 multiply(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

}  // namespace

Mat2 gate_matrix(GateKind kind, double theta) {
    constexpr Complex zero{0.0, 0.0};
    constexpr Complex one{1.0, 0.0};
    switch (kind) {
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            return {Complex{r, 0}, Complex{r, 0}, Complex{r, 0}, Complex{-r, 0}};
        }
        case GateKind::X:
        case GateKind::CX:
        case GateKind::MCX:
            return {zero, one, one, zero};
        case GateKind::Z:
            return {one, zero, zero, -one};
        case GateKind::Ry:
        case GateKind::MCRy: {
            const double c = std::cos(theta / 2.0);
            const double s = std::sin(theta / 2.0);
            return {Complex{c, 0}, Complex{-s, 0}, Complex{s, 0}, Complex{c, 0}};
        }
        case GateKind::Rz:
            return {std::polar(1.0, -theta / 2.0), zero, zero, std::polar(1.0, theta / 2.0)};
        case GateKind::Barrier:
            break;
    }
    return {one, zero, zero, one};
}

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0 || num_qubits > 62) {
        throw std::invalid_argument("state must have between 1 and 62 qubits");
    }
    amps_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(std::vector<Complex> amplitudes) : num_qubits_(0), amps_(std::move(amplitudes)) {
    if (amps_.size() < 2 || !std::has_single_bit(amps_.size())) {
        throw std::invalid_argument("amplitude count must be a power of two >= 2");
    }
    num_qubits_ = static_cast<std::size_t>(std::countr_zero(amps_.size()));
    if (std::abs(norm_squared() - 1.0) > kNormTolerance) {
        throw std::invalid_argument("amplitudes are not normalized");
    }
}

void StateVector::apply_matrix(const Mat2& m, Qubit target, std::uint64_t control_mask) {
    const std::uint64_t tbit = std::uint64_t{1} << target;
    if (control_mask != 0) {
        // Walk only the subspace where every control is set.
        const std::uint64_t free = (amps_.size() - 1) & ~control_mask & ~tbit;
        for (std::uint64_t sub = 0;; sub = (sub - free) & free) {
            const std::uint64_t i0 = sub | control_mask;
            const std::uint64_t i1 = i0 | tbit;
            const Complex a0 = amps_[i0];
            const Complex a1 = amps_[i1];
            amps_[i0] = mul(m[0], a0) + mul(m[1], a1);
            amps_[i1] = mul(m[2], a0) + mul(m[3], a1);
            if (sub == free) {
                break;
            }
        }
        return;
    }
    const std::uint64_t half = amps_.size() >> 1;
    for (std::uint64_t i = 0; i < half; ++i) {
        const std::uint64_t lo = i & (tbit - 1);
        const std::uint64_t i0 = ((i ^ lo) << 1) | lo;
        const std::uint64_t i1 = i0 | tbit;
        const Complex a0 = amps_[i0];
        const Complex a1 = amps_[i1];
        amps_[i0] = mul(m[0], a0) + mul(m[1], a1);
        amps_[i1] = mul(m[2], a0) + mul(m[3], a1);
    }
}

void StateVector::apply(const GateOp& op) {
    if (op.is_barrier()) {
        return;
    }
    std::uint64_t mask = 0;
    for (Qubit q : op.qubits()) {
        if (q >= num_qubits_) {
            throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " +
                                    std::to_string(num_qubits_) + "-qubit state");
        }
    }
    for (Qubit c : op.controls) {
        mask |= std::uint64_t{1} << c;
    }
    apply_matrix(gate_matrix(op.kind, op.theta), op.targets.front(), mask);
}

double StateVector::norm_squared() const noexcept {
    double sum = 0.0;
    for (const auto& a : amps_) {
        sum += std::norm(a);
    }
    return sum;
}

namespace {

/// Circuits without multi-qubit gates leave every qubit in its own state;
/// the register is their tensor product, built by doubling.
StateVector run_product(const Circuit& circuit) {
    std::vector<Mat2> local(circuit.width(), gate_matrix(GateKind::Barrier, 0.0));
    for (const auto& op : circuit) {
        if (!op.is_barrier()) {
            auto& m = local[op.targets.front()];
            m = multiply(gate_matrix(op.kind, op.theta), m);
        }
    }
    std::vector<Complex> amps(std::size_t{1} << circuit.width());
    amps[0] = 1.0;
    for (std::size_t q = 0; q < circuit.width(); ++q) {
        // column 0 of the fused matrix is the qubit's state
        const Complex a0 = local[q][0];
        const Complex a1 = local[q][2];
        const std::size_t half = std::size_t{1} << q;
        for (std::size_t i = 0; i < half; ++i) {
            amps[i + half] = mul(amps[i], a1);
            amps[i] = mul(amps[i], a0);
        }
    }
    return StateVector(std::move(amps));
}

}  // namespace

StateVector run_statevector(const Circuit& circuit, const SimulatorOptions& options) {
    if (circuit.width() > options.max_qubits) {
        throw ResourceError("circuit width " + std::to_string(circuit.width()) +
                            " exceeds simulation cap of " + std::to_string(options.max_qubits) +
                            " qubits");
    }
    if (circuit.multi_qubit_gate_count() == 0) {
        return run_product(circuit);
    }
    StateVector state(circuit.width());
    std::vector<std::optional<Mat2>> pending(circuit.width());

    auto flush = [&](Qubit q) {
        if (pending[q]) {
            state.apply_matrix(*pending[q], q);
            pending[q].reset();
        }
    };

    for (const auto& op : circuit) {
        if (op.is_barrier()) {
            continue;
        }
        if (op.arity() == 1) {
            const Qubit q = op.targets.front();
            const Mat2 m = gate_matrix(op.kind, op.theta);
            pending[q] = pending[q] ? multiply(m, *pending[q]) : m;
            continue;
        }
        for (Qubit q : op.qubits()) {
            flush(q);
        }
        state.apply(op);
    }
    for (Qubit q = 0; q < circuit.width(); ++q) {
        flush(q);
    }
    return state;
}

std::vector<double> probabilities(const StateVector& state) {
    std::vector<double> p(state.dimension());
    std::transform(state.amplitudes().begin(), state.amplitudes().end(), p.begin(),
                   [](const Complex& a) { return std::norm(a); });
    return p;
}

Counts sample_counts(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
    Rng rng(seed);
    return sample_counts(state, shots, rng);
}

Counts sample_counts(const StateVector& state, std::uint64_t shots, Rng& rng) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be at least 1");
    }
    // Sorted uniforms against one cumulative sweep: O(shots log shots + 2^n)
    // time without materializing a CDF array.
    const double total = state.norm_squared();
    std::vector<double> draws(shots);
    for (auto& u : draws) {
        u = rng.uniform() * total;
    }
    std::sort(draws.begin(), draws.end());

    Counts counts(state.num_qubits());
    const auto amps = state.amplitudes();
    std::size_t next = 0;
    double cumulative = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < amps.size() && next < draws.size(); ++i) {
        const double p = std::norm(amps[i]);
        if (p == 0.0) {
            continue;
        }
        last_nonzero = i;
        cumulative += p;
        std::uint64_t hits = 0;
        while (next < draws.size() && draws[next] < cumulative) {
            ++hits;
            ++next;
        }
        counts.add(i, hits);
    }
    // Rounding can leave the top draws just above the final cumulative sum.
    counts.add(last_nonzero, draws.size() - next);
    return counts;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
    if (a.dimension() != b.dimension()) {
        throw std::invalid_argument("inner product of states with different dimensions");
    }
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        sum += std::conj(a[i]) * b[i];
    }
    return sum;
}

}  // namespace qeb
