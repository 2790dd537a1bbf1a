#include "qeb/pipeline.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qeb/encoders.hpp"
#include "qeb/errors.hpp"

namespace qeb {

namespace {

void require_width(std::size_t got, std::size_t expected, const char* what) {
    if (got != expected) {
        throw std::invalid_argument(std::string(what) + " width " + std::to_string(got) + " does not match expected " +
                                    std::to_string(expected));
    }
}

std::size_t frqi_bits_for(std::size_t rows, std::size_t cols) {
    if (rows != cols || !std::has_single_bit(rows)) {
        throw std::invalid_argument("FRQI decode needs a square power-of-two image");
    }
    return 2 * static_cast<std::size_t>(std::countr_zero(rows)) + 1;
}

double clamp01(double x) noexcept { return std::clamp(x, 0.0, 1.0); }

/// Lattice/phase decode from per-qubit P0 values.
ReconstructedImage decode_from_p0(const std::vector<double>& p0, std::size_t rows, std::size_t cols) {
    ReconstructedImage out;
    out.rows = rows;
    out.cols = cols;
    out.values.reserve(p0.size());
    out.raw_angles.reserve(p0.size());
    out.unobserved.assign(p0.size(), false);
    for (double p : p0) {
        const double angle = std::clamp(2.0 * std::acos(std::sqrt(clamp01(p))), 0.0, std::numbers::pi);
        out.raw_angles.push_back(angle);
        out.values.push_back(quantize_pixel(angle / std::numbers::pi));
    }
    return out;
}

/// FRQI decode from per-position (P(j,0), P(j,1)) pairs.
ReconstructedImage decode_from_pairs(const std::vector<double>& zero, const std::vector<double>& one,
                                     std::size_t rows, std::size_t cols) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    ReconstructedImage out;
    out.rows = rows;
    out.cols = cols;
    out.values.reserve(zero.size());
    out.raw_angles.reserve(zero.size());
    out.unobserved.reserve(zero.size());
    for (std::size_t j = 0; j < zero.size(); ++j) {
        const double total = zero[j] + one[j];
        if (total <= 0.0) {
            out.values.push_back(0);
            out.raw_angles.push_back(0.0);
            out.unobserved.push_back(true);
            continue;
        }
        const double angle = std::clamp(std::acos(std::sqrt(clamp01(zero[j] / total))), 0.0, half_pi);
        out.raw_angles.push_back(angle);
        out.values.push_back(quantize_pixel(angle / half_pi));
        out.unobserved.push_back(false);
    }
    return out;
}

std::vector<double> lattice_p0_from_counts(const Counts& counts, std::size_t rows, std::size_t cols) {
    if (counts.empty()) {
        throw std::invalid_argument("cannot decode empty counts");
    }
    require_width(counts.num_bits(), rows * cols, "counts");
    std::vector<std::uint64_t> ones(counts.num_bits(), 0);
    for (const auto& [outcome, n] : counts) {
        for (std::size_t q = 0; q < ones.size(); ++q) {
            if ((outcome >> q) & 1U) {
                ones[q] += n;
            }
        }
    }
    const double total = static_cast<double>(counts.total());
    std::vector<double> p0(ones.size());
    for (std::size_t q = 0; q < ones.size(); ++q) {
        p0[q] = static_cast<double>(counts.total() - ones[q]) / total;
    }
    return p0;
}

}  // namespace

std::string_view to_string(EncodingKind kind) noexcept {
    switch (kind) {
        case EncodingKind::QubitLattice: return "ql";
        case EncodingKind::PhaseEncoding: return "phase";
        case EncodingKind::FRQI: return "frqi";
    }
    return "?";
}

std::optional<EncodingKind> parse_encoding(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "ql" || lower == "qubit_lattice" || lower == "lattice") {
        return EncodingKind::QubitLattice;
    }
    if (lower == "phase" || lower == "phase_encoding") {
        return EncodingKind::PhaseEncoding;
    }
    if (lower == "frqi") {
        return EncodingKind::FRQI;
    }
    return std::nullopt;
}

Circuit encode(const GrayImage& image, EncodingKind kind, const SimulatorOptions& options) {
    switch (kind) {
        case EncodingKind::QubitLattice: return encode_qubit_lattice(image, options);
        case EncodingKind::PhaseEncoding: return encode_phase(image, options);
        case EncodingKind::FRQI: return encode_frqi(image, options);
    }
    throw std::invalid_argument("unknown encoding");
}

std::size_t encoding_width(EncodingKind kind, std::size_t rows, std::size_t cols) {
    if (kind != EncodingKind::FRQI) {
        return rows * cols;
    }
    return 2 * static_cast<std::size_t>(std::bit_width(rows) - 1) + 1;
}

std::size_t ReconstructedImage::unobserved_count() const noexcept {
    return static_cast<std::size_t>(std::count(unobserved.begin(), unobserved.end(), true));
}

GrayImage ReconstructedImage::to_image() const { return GrayImage(rows, cols, values); }

int quantize_pixel(double fraction_of_range) noexcept {
    const double scaled = std::floor(fraction_of_range * 255.0 + 0.5);
    return static_cast<int>(std::clamp(scaled, 0.0, 255.0));
}

Circuit apply_inversion(const Circuit& circuit, EncodingKind kind) {
    Circuit out = circuit;
    if (kind == EncodingKind::FRQI) {
        out.append(GateOp::x(0));
        return out;
    }
    for (std::size_t q = 0; q < circuit.width(); ++q) {
        out.append(GateOp::x(static_cast<Qubit>(q)));
    }
    return out;
}

ReconstructedImage decode_qubit_lattice(const Counts& counts, std::size_t rows, std::size_t cols) {
    return decode_from_p0(lattice_p0_from_counts(counts, rows, cols), rows, cols);
}

ReconstructedImage decode_phase(const Counts& counts, std::size_t rows, std::size_t cols) {
    // H Rz(theta) H |0> has P(0) = cos^2(theta/2), the lattice relation.
    return decode_from_p0(lattice_p0_from_counts(counts, rows, cols), rows, cols);
}

ReconstructedImage decode_frqi(const Counts& counts, std::size_t rows, std::size_t cols) {
    const std::size_t width = frqi_bits_for(rows, cols);
    if (counts.empty()) {
        throw std::invalid_argument("cannot decode empty counts");
    }
    require_width(counts.num_bits(), width, "counts");
    const std::size_t pixels = rows * cols;
    std::vector<double> zero(pixels, 0.0);
    std::vector<double> one(pixels, 0.0);
    for (const auto& [outcome, n] : counts) {
        const std::size_t position = outcome >> 1;
        ((outcome & 1U) ? one : zero)[position] += static_cast<double>(n);
    }
    return decode_from_pairs(zero, one, rows, cols);
}

ReconstructedImage decode(const Counts& counts, EncodingKind kind, std::size_t rows, std::size_t cols) {
    switch (kind) {
        case EncodingKind::QubitLattice: return decode_qubit_lattice(counts, rows, cols);
        case EncodingKind::PhaseEncoding: return decode_phase(counts, rows, cols);
        case EncodingKind::FRQI: return decode_frqi(counts, rows, cols);
    }
    throw std::invalid_argument("unknown encoding");
}

ReconstructedImage decode_from_statevector(const StateVector& state, EncodingKind kind, std::size_t rows,
                                           std::size_t cols) {
    const auto amps = state.amplitudes();
    if (kind == EncodingKind::FRQI) {
        require_width(state.num_qubits(), frqi_bits_for(rows, cols), "state");
        const std::size_t pixels = rows * cols;
        std::vector<double> zero(pixels);
        std::vector<double> one(pixels);
        for (std::size_t j = 0; j < pixels; ++j) {
            zero[j] = std::norm(amps[frqi_index(j, 0)]);
            one[j] = std::norm(amps[frqi_index(j, 1)]);
        }
        return decode_from_pairs(zero, one, rows, cols);
    }

    require_width(state.num_qubits(), rows * cols, "state");
    // One pass over the amplitudes accumulates every per-qubit P(1).
    std::vector<double> p1(state.num_qubits(), 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        if (p == 0.0) {
            continue;
        }
        total += p;
        for (std::uint64_t bits = i; bits != 0; bits &= bits - 1) {
            p1[static_cast<std::size_t>(std::countr_zero(bits))] += p;
        }
    }
    std::vector<double> p0(p1.size());
    for (std::size_t q = 0; q < p1.size(); ++q) {
        p0[q] = 1.0 - p1[q] / total;
    }
    return decode_from_p0(p0, rows, cols);
}

}  // namespace qeb
