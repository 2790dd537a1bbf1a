#include "qeb/encoders.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qeb/errors.hpp"

namespace qeb {

namespace {

void check_lattice_width(const GrayImage& image, const SimulatorOptions& options) {
    if (image.size() > options.max_qubits) {
        throw ResourceError(std::to_string(image.rows()) + "x" + std::to_string(image.cols()) +
                            " image needs " + std::to_string(image.size()) +
                            " qubits, above the simulation cap of " + std::to_string(options.max_qubits));
    }
}

}  // namespace

AngleVector interpolate(const GrayImage& image, double range_max) {
    if (!(range_max > 0.0) || !std::isfinite(range_max)) {
        throw std::invalid_argument("angle range must be positive");
    }
    AngleVector out;
    out.range_max = range_max;
    out.angles.reserve(image.size());
    for (int p : image.pixels()) {
        out.angles.push_back(static_cast<double>(p) / 255.0 * range_max);
    }
    return out;
}

Circuit encode_qubit_lattice(const GrayImage& image, const SimulatorOptions& options) {
    check_lattice_width(image, options);
    const auto angles = interpolate(image, kLatticeRange);
    Circuit circuit(image.size());
    for (std::size_t i = 0; i < angles.angles.size(); ++i) {
        circuit.append(GateOp::ry(angles.angles[i], static_cast<Qubit>(i)));
    }
    return circuit;
}

Circuit encode_phase(const GrayImage& image, const SimulatorOptions& options) {
    check_lattice_width(image, options);
    const auto angles = interpolate(image, kLatticeRange);
    Circuit circuit(image.size());
    for (std::size_t i = 0; i < angles.angles.size(); ++i) {
        const auto q = static_cast<Qubit>(i);
        circuit.append(GateOp::h(q));
        circuit.append(GateOp::rz(angles.angles[i], q));
        circuit.append(GateOp::h(q));
    }
    return circuit;
}

std::size_t frqi_position_bits_per_axis(const GrayImage& image) {
    if (!image.is_square()) {
        throw ShapeError("FRQI needs a square image, got " + std::to_string(image.rows()) + "x" +
                         std::to_string(image.cols()));
    }
    if (!std::has_single_bit(image.rows())) {
        throw ShapeError("FRQI needs a power-of-two side, got " + std::to_string(image.rows()));
    }
    return static_cast<std::size_t>(std::countr_zero(image.rows()));
}

Circuit encode_frqi(const GrayImage& image, const SimulatorOptions& options) {
    const std::size_t n = frqi_position_bits_per_axis(image);
    const std::size_t position_bits = 2 * n;
    const std::size_t width = position_bits + 1;
    if (width > options.max_qubits) {
        throw ResourceError("FRQI register of " + std::to_string(width) +
                            " qubits exceeds the simulation cap of " + std::to_string(options.max_qubits));
    }
    // A 1x1 image has no position register; its single pixel is a plain Ry.
    const auto angles = interpolate(image, kFrqiRange);
    Circuit circuit(width);
    constexpr Qubit colour = 0;
    if (position_bits == 0) {
        circuit.append(GateOp::ry(2.0 * angles.angles.front(), colour));
        return circuit;
    }

    std::vector<Qubit> position(position_bits);
    std::vector<Qubit> all(width);
    for (std::size_t k = 0; k < width; ++k) {
        all[k] = static_cast<Qubit>(k);
    }
    for (std::size_t k = 0; k < position_bits; ++k) {
        position[k] = static_cast<Qubit>(k + 1);
        circuit.append(GateOp::h(position[k]));
    }

    for (std::size_t i = 0; i < angles.angles.size(); ++i) {
        auto toggle = [&] {
            for (std::size_t k = 0; k < position_bits; ++k) {
                if (((i >> k) & 1U) == 0) {
                    circuit.append(GateOp::x(position[k]));
                }
            }
        };
        toggle();
        circuit.append(GateOp::barrier(all));
        circuit.append(decompose_mcry(2.0 * angles.angles[i], position, colour));
        circuit.append(GateOp::barrier(all));
        toggle();
    }
    return circuit;
}

StateVector frqi_ideal_state(const GrayImage& image) {
    const std::size_t n = frqi_position_bits_per_axis(image);
    const auto angles = interpolate(image, kFrqiRange);
    const double scale = 1.0 / static_cast<double>(std::size_t{1} << n);
    std::vector<Complex> amps(std::size_t{2} << (2 * n), Complex{0.0, 0.0});
    for (std::size_t i = 0; i < angles.angles.size(); ++i) {
        amps[frqi_index(i, 0)] = scale * std::cos(angles.angles[i]);
        amps[frqi_index(i, 1)] = scale * std::sin(angles.angles[i]);
    }
    return StateVector(std::move(amps));
}

}  // namespace qeb
