#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qeb/circuit.hpp"
#include "qeb/counts.hpp"
#include "qeb/image.hpp"
#include "qeb/statevector.hpp"

namespace qeb {

enum class EncodingKind { QubitLattice, PhaseEncoding, FRQI };

/// "ql", "phase", "frqi"
[[nodiscard]] std::string_view to_string(EncodingKind kind) noexcept;
/// Accepts the short names above plus "qubit_lattice"/"lattice" and "phase_encoding".
[[nodiscard]] std::optional<EncodingKind> parse_encoding(std::string_view name);

/// Dispatches to encode_qubit_lattice / encode_phase / encode_frqi.
[[nodiscard]] Circuit encode(const GrayImage& image, EncodingKind kind, const SimulatorOptions& options = {});

/// Number of qubits the encoding needs for a rows x cols image (no shape checks).
[[nodiscard]] std::size_t encoding_width(EncodingKind kind, std::size_t rows, std::size_t cols);

struct ReconstructedImage {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<int> values;          ///< rounded pixels in [0, 255]
    std::vector<double> raw_angles;   ///< decoded angle before rounding, clamped to the encoding's range
    std::vector<bool> unobserved;     ///< FRQI positions with no samples; always false otherwise

    [[nodiscard]] std::size_t unobserved_count() const noexcept;
    [[nodiscard]] GrayImage to_image() const;
};

/// Appends the pixel-inversion gates: X on every qubit for the lattice and
/// phase encodings (theta -> pi - theta), X on the colour qubit for FRQI
/// (theta -> pi/2 - theta).
[[nodiscard]] Circuit apply_inversion(const Circuit& circuit, EncodingKind kind);

/// Per qubit: P0 = marginal frequency of bit 0, angle = 2 acos(sqrt(P0)),
/// value = round(angle / pi * 255). Throws std::invalid_argument for empty
/// counts or a bitstring width other than rows*cols.
[[nodiscard]] ReconstructedImage decode_qubit_lattice(const Counts& counts, std::size_t rows, std::size_t cols);

/// Same contract as decode_qubit_lattice; the trailing H leaves P(1) = sin^2(theta/2).
[[nodiscard]] ReconstructedImage decode_phase(const Counts& counts, std::size_t rows, std::size_t cols);

/// Per position j: angle = acos(sqrt(P(j,0) / (P(j,0) + P(j,1)))),
/// value = round(angle / (pi/2) * 255). Positions never observed decode to 0
/// and are flagged. Throws std::invalid_argument on width mismatch.
[[nodiscard]] ReconstructedImage decode_frqi(const Counts& counts, std::size_t rows, std::size_t cols);

[[nodiscard]] ReconstructedImage decode(const Counts& counts, EncodingKind kind, std::size_t rows, std::size_t cols);

/// The same formulas evaluated on exact Born probabilities (infinite-shot limit).
[[nodiscard]] ReconstructedImage decode_from_statevector(const StateVector& state, EncodingKind kind,
                                                         std::size_t rows, std::size_t cols);

/// Round half up, then clamp to [0, 255].
[[nodiscard]] int quantize_pixel(double fraction_of_range) noexcept;

}  // namespace qeb
