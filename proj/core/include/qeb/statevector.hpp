#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qeb/circuit.hpp"
#include "qeb/counts.hpp"
#include "qeb/random.hpp"

namespace qeb {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix: {m00, m01, m10, m11}.
using Mat2 = std::array<Complex, 4>;

/// The single-qubit unitary applied to the target of a gate of this kind.
/// Multi-controlled kinds return their target action (X for CX/MCX).
[[nodiscard]] Mat2 gate_matrix(GateKind kind, double theta);

/**
 * Dense n-qubit pure state, 2^n amplitudes indexed with qubit 0 as the least
 * significant bit. Freshly constructed states are |0...0>.
 */
class StateVector {
public:
    explicit StateVector(std::size_t num_qubits);
    /// Adopts amplitudes; throws std::invalid_argument unless the length is a
    /// power of two and the norm is 1 within 1e-9.
    explicit StateVector(std::vector<Complex> amplitudes);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] const Complex& operator[](std::size_t i) const noexcept { return amps_[i]; }

    /// Applies a gate in place; barriers are no-ops. Throws std::out_of_range
    /// for qubit indices >= num_qubits().
    void apply(const GateOp& op);

    /// Applies `m` to `target` on the subspace where every bit of
    /// `control_mask` is set.
    void apply_matrix(const Mat2& m, Qubit target, std::uint64_t control_mask = 0);

    /// Sum of |a_i|^2.
    [[nodiscard]] double norm_squared() const noexcept;

private:
    std::size_t num_qubits_;
    std::vector<Complex> amps_;
};

inline void apply_gate(StateVector& state, const GateOp& op) { state.apply(op); }

struct SimulatorOptions {
    std::size_t max_qubits = 26;
};

/// Runs the circuit from |0...0>. Consecutive single-qubit gates on the same
/// qubit are fused before application, and circuits without multi-qubit gates
/// are assembled directly as a product state. Throws ResourceError if the
/// width exceeds options.max_qubits.
[[nodiscard]] StateVector run_statevector(const Circuit& circuit, const SimulatorOptions& options = {});

/// |a_i|^2 for every basis index.
[[nodiscard]] std::vector<double> probabilities(const StateVector& state);

/// Draws `shots` outcomes from the Born distribution of `state`.
/// Throws std::invalid_argument when shots == 0.
[[nodiscard]] Counts sample_counts(const StateVector& state, std::uint64_t shots, std::uint64_t seed);
[[nodiscard]] Counts sample_counts(const StateVector& state, std::uint64_t shots, Rng& rng);

/// Inner product <a|b>. Throws std::invalid_argument on dimension mismatch.
[[nodiscard]] Complex inner_product(const StateVector& a, const StateVector& b);

}  // namespace qeb
