#pragma once

#include <cstdint>

#include "qeb/circuit.hpp"
#include "qeb/counts.hpp"
#include "qeb/statevector.hpp"

namespace qeb {

/// Symmetric depolarizing noise plus classical readout flips.
struct NoiseConfig {
    double p1 = 0.0;         ///< Pauli error after each single-qubit gate
    double p2 = 0.0;         ///< Pauli error on every operand after each multi-qubit gate
    double p_readout = 0.0;  ///< independent flip of each measured bit

    /// Throws std::invalid_argument unless all probabilities lie in [0, 1].
    void validate() const;
    [[nodiscard]] bool noiseless() const noexcept { return p1 == 0.0 && p2 == 0.0 && p_readout == 0.0; }

    friend bool operator==(const NoiseConfig&, const NoiseConfig&) = default;
};

/**
 * Monte-Carlo trajectory sampling of `circuit` under `noise`.
 *
 * After each single-qubit gate a uniformly chosen X, Y or Z hits its qubit
 * with probability p1. After each multi-qubit gate, with probability p2,
 * every participating qubit receives an independent uniform Pauli. Each
 * measured bit then flips with probability p_readout.
 *
 * Shots sharing an error pattern are simulated once. With p1 = p2 = 0 the
 * result is identical to sample_counts(run_statevector(circuit), shots, seed).
 * Circuits without multi-qubit gates stay in a product state and are sampled
 * qubit by qubit, so their cost does not depend on width.
 *
 * Throws ResourceError when the width exceeds options.max_qubits and
 * std::invalid_argument for shots == 0 or an invalid NoiseConfig.
 */
[[nodiscard]] Counts run_noisy(const Circuit& circuit, const NoiseConfig& noise, std::uint64_t shots,
                               std::uint64_t seed, const SimulatorOptions& options = {});

}  // namespace qeb
