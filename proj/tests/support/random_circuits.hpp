#pragma once

#include <algorithm>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "qeb/circuit.hpp"
#include "qeb/image.hpp"

namespace testgen {

struct CircuitShape {
    std::size_t min_width = 1;
    std::size_t max_width = 5;
    std::size_t max_ops = 30;
    bool barriers = true;
};

inline std::vector<qeb::Qubit> distinct_qubits(std::mt19937_64& gen, std::size_t width, std::size_t k) {
    std::vector<qeb::Qubit> all(width);
    for (std::size_t i = 0; i < width; ++i) {
        all[i] = static_cast<qeb::Qubit>(i);
    }
    std::shuffle(all.begin(), all.end(), gen);
    all.resize(k);
    return all;
}

inline qeb::GateOp random_gate(std::mt19937_64& gen, std::size_t width, bool barriers) {
    std::uniform_real_distribution<double> angle(-2 * std::numbers::pi, 2 * std::numbers::pi);
    std::uniform_int_distribution<qeb::Qubit> qubit(0, static_cast<qeb::Qubit>(width - 1));
    const int kinds = width >= 2 ? (barriers ? 9 : 8) : 5;
    switch (std::uniform_int_distribution<int>(0, kinds - 1)(gen)) {
        case 0: return qeb::GateOp::h(qubit(gen));
        case 1: return qeb::GateOp::x(qubit(gen));
        case 2: return qeb::GateOp::z(qubit(gen));
        case 3: return qeb::GateOp::ry(angle(gen), qubit(gen));
        case 4: return qeb::GateOp::rz(angle(gen), qubit(gen));
        case 5: {
            auto q = distinct_qubits(gen, width, 2);
            return qeb::GateOp::cx(q[0], q[1]);
        }
        case 6: {
            const auto k = std::uniform_int_distribution<std::size_t>(2, width)(gen);
            auto q = distinct_qubits(gen, width, k);
            const auto t = q.back();
            q.pop_back();
            return qeb::GateOp::mcx(q, t);
        }
        case 7: {
            const auto k = std::uniform_int_distribution<std::size_t>(2, width)(gen);
            auto q = distinct_qubits(gen, width, k);
            const auto t = q.back();
            q.pop_back();
            return qeb::GateOp::mcry(angle(gen), q, t);
        }
        default: {
            const auto k = std::uniform_int_distribution<std::size_t>(1, width)(gen);
            return qeb::GateOp::barrier(distinct_qubits(gen, width, k));
        }
    }
}

inline qeb::Circuit random_circuit(std::mt19937_64& gen, const CircuitShape& shape = {}) {
    const auto width = std::uniform_int_distribution<std::size_t>(shape.min_width, shape.max_width)(gen);
    const auto count = std::uniform_int_distribution<std::size_t>(0, shape.max_ops)(gen);
    qeb::Circuit c(width);
    for (std::size_t i = 0; i < count; ++i) {
        c.append(random_gate(gen, width, shape.barriers));
    }
    return c;
}

inline qeb::GrayImage random_image(std::mt19937_64& gen, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> px(0, 255);
    std::vector<int> pixels(rows * cols);
    for (auto& p : pixels) {
        p = px(gen);
    }
    return qeb::GrayImage(rows, cols, std::move(pixels));
}

}  // namespace testgen
