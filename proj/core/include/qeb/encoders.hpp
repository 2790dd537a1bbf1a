#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

#include "qeb/circuit.hpp"
#include "qeb/image.hpp"
#include "qeb/statevector.hpp"

namespace qeb {

/// Pixel angles for the rotation-based encodings.
struct AngleVector {
    std::vector<double> angles;
    double range_max = std::numbers::pi;
};

/// Upper end of the angle range used by the one-qubit-per-pixel encodings.
inline constexpr double kLatticeRange = std::numbers::pi;
/// Upper end of the angle range used by FRQI.
inline constexpr double kFrqiRange = std::numbers::pi / 2.0;

/// angles[i] = pixels[i] / 255 * range_max, row-major. Throws
/// std::invalid_argument if range_max is not positive.
[[nodiscard]] AngleVector interpolate(const GrayImage& image, double range_max);

/// One Ry(theta_i) on qubit i per pixel; width rows*cols, depth 1.
/// Throws ResourceError if rows*cols exceeds options.max_qubits.
[[nodiscard]] Circuit encode_qubit_lattice(const GrayImage& image, const SimulatorOptions& options = {});

/// H, Rz(theta_i), H on qubit i per pixel; width rows*cols, depth 3.
/// P(1) on qubit i is sin^2(theta_i / 2).
[[nodiscard]] Circuit encode_phase(const GrayImage& image, const SimulatorOptions& options = {});

/// Returns n for a 2^n x 2^n image; throws ShapeError otherwise.
[[nodiscard]] std::size_t frqi_position_bits_per_axis(const GrayImage& image);

/**
 * FRQI state preparation on 2n+1 qubits for a 2^n x 2^n image.
 *
 * Qubit 0 holds the colour; qubits 1..2n hold the pixel index i = row * side
 * + col with bit k of i on qubit 1+k (row in the high bits). After Hadamards
 * on the position register, each pixel i gets X toggles on the position
 * qubits whose bit of i is 0, a barrier, the decomposed multi-controlled
 * Ry(2 theta_i) onto the colour qubit, a barrier and the matching untoggles.
 *
 * Throws ShapeError for non-square or non-power-of-two images and
 * ResourceError if 2n+1 exceeds options.max_qubits.
 */
[[nodiscard]] Circuit encode_frqi(const GrayImage& image, const SimulatorOptions& options = {});

/// Directly constructed FRQI state: amplitude cos(theta_i) / 2^n at
/// (colour 0, position i) and sin(theta_i) / 2^n at (colour 1, position i).
[[nodiscard]] StateVector frqi_ideal_state(const GrayImage& image);

/// Basis index of (colour, position) in the FRQI register layout.
[[nodiscard]] constexpr std::size_t frqi_index(std::size_t position, unsigned colour) noexcept {
    return (position << 1) | colour;
}

}  // namespace qeb
