#include "qeb/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace qeb {

std::string_view to_string(GateKind kind) noexcept {
    switch (kind) {
        case GateKind::H: return "h";
        case GateKind::X: return "x";
        case GateKind::Z: return "z";
        case GateKind::Ry: return "ry";
        case GateKind::Rz: return "rz";
        case GateKind::CX: return "cx";
        case GateKind::MCX: return "mcx";
        case GateKind::MCRy: return "mcry";
        case GateKind::Barrier: return "barrier";
    }
    return "?";
}

namespace {

GateOp single(GateKind kind, Qubit q, double theta = 0.0) {
    GateOp op{kind, theta, {q}, {}};
    op.validate();
    return op;
}

GateOp controlled(GateKind kind, std::vector<Qubit> controls, Qubit target, double theta = 0.0) {
    GateOp op{kind, theta, {target}, std::move(controls)};
    op.validate();
    return op;
}

void write_list(std::ostream& os, const std::vector<Qubit>& qs) {
    os << '[';
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (i != 0) {
            os << ',';
        }
        os << qs[i];
    }
    os << ']';
}

}  // namespace

GateOp GateOp::h(Qubit q) { return single(GateKind::H, q); }
GateOp GateOp::x(Qubit q) { return single(GateKind::X, q); }
GateOp GateOp::z(Qubit q) { return single(GateKind::Z, q); }
GateOp GateOp::ry(double theta, Qubit q) { return single(GateKind::Ry, q, theta); }
GateOp GateOp::rz(double theta, Qubit q) { return single(GateKind::Rz, q, theta); }
GateOp GateOp::cx(Qubit control, Qubit target) { return controlled(GateKind::CX, {control}, target); }

GateOp GateOp::mcx(std::vector<Qubit> controls, Qubit target) {
    return controlled(GateKind::MCX, std::move(controls), target);
}

GateOp GateOp::mcry(double theta, std::vector<Qubit> controls, Qubit target) {
    return controlled(GateKind::MCRy, std::move(controls), target, theta);
}

GateOp GateOp::barrier(std::vector<Qubit> qubits) {
    GateOp op{GateKind::Barrier, 0.0, std::move(qubits), {}};
    op.validate();
    return op;
}

std::vector<Qubit> GateOp::qubits() const {
    std::vector<Qubit> all = controls;
    all.insert(all.end(), targets.begin(), targets.end());
    return all;
}

void GateOp::validate() const {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("gate angle must be finite");
    }
    if (!is_parametric(kind) && theta != 0.0) {
        throw std::invalid_argument(std::string(to_string(kind)) + " takes no angle");
    }
    switch (kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::Z:
        case GateKind::Ry:
        case GateKind::Rz:
            if (targets.size() != 1 || !controls.empty()) {
                throw std::invalid_argument(std::string(to_string(kind)) +
                                            " acts on exactly one qubit");
            }
            break;
        case GateKind::CX:
            if (targets.size() != 1 || controls.size() != 1) {
                throw std::invalid_argument("cx needs one control and one target");
            }
            break;
        case GateKind::MCX:
        case GateKind::MCRy:
            if (targets.size() != 1 || controls.empty()) {
                throw std::invalid_argument(std::string(to_string(kind)) +
                                            " needs one target and at least one control");
            }
            break;
        case GateKind::Barrier:
            if (targets.empty() || !controls.empty()) {
                throw std::invalid_argument("barrier must span at least one qubit");
            }
            break;
    }
    std::unordered_set<Qubit> seen;
    for (Qubit q : controls) {
        if (!seen.insert(q).second) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " repeated in gate");
        }
    }
    for (Qubit q : targets) {
        if (!seen.insert(q).second) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " repeated in gate");
        }
    }
}

std::string to_string(const GateOp& op) {
    std::ostringstream os;
    os.precision(17);
    os << to_string(op.kind);
    if (is_parametric(op.kind)) {
        os << '(' << op.theta << ')';
    }
    os << " targets=";
    write_list(os, op.targets);
    os << " controls=";
    write_list(os, op.controls);
    return os.str();
}

Circuit::Circuit(std::size_t width) : width_(width) {
    if (width == 0) {
        throw std::invalid_argument("circuit width must be at least 1");
    }
}

Circuit& Circuit::append(GateOp op) {
    op.validate();
    for (Qubit q : op.qubits()) {
        if (q >= width_) {
            throw std::out_of_range("qubit " + std::to_string(q) + " out of range for width " +
                                    std::to_string(width_));
        }
    }
    ops_.push_back(std::move(op));
    return *this;
}

Circuit& Circuit::append(std::span<const GateOp> ops) {
    for (const auto& op : ops) {
        append(op);
    }
    return *this;
}

std::size_t Circuit::gate_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(ops_.begin(), ops_.end(), [](const GateOp& op) { return !op.is_barrier(); }));
}

std::size_t Circuit::multi_qubit_gate_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(ops_.begin(), ops_.end(), [](const GateOp& op) { return op.is_multi_qubit(); }));
}

void Circuit::dump(std::ostream& os) const {
    for (const auto& op : ops_) {
        os << to_string(op) << '\n';
    }
}

Layering layering(const Circuit& circuit) {
    Layering result;
    result.layer_of_op.reserve(circuit.size());
    // frontier[q]: number of layers already closed for qubit q
    std::vector<std::size_t> frontier(circuit.width(), 0);

    for (const auto& op : circuit) {
        const auto qs = op.qubits();
        std::size_t level = 0;
        for (Qubit q : qs) {
            level = std::max(level, frontier[q]);
        }
        if (op.is_barrier()) {
            for (Qubit q : qs) {
                frontier[q] = level;
            }
            result.layer_of_op.push_back(Layering::kNoLayer);
            continue;
        }
        for (Qubit q : qs) {
            frontier[q] = level + 1;
        }
        result.layer_of_op.push_back(level);
        result.depth = std::max(result.depth, level + 1);
    }
    return result;
}

std::size_t depth(const Circuit& circuit) { return layering(circuit).depth; }

std::vector<GateOp> decompose_mcry(double theta, std::span<const Qubit> controls, Qubit target) {
    if (controls.empty()) {
        throw std::invalid_argument("decompose_mcry needs at least one control");
    }
    std::vector<Qubit> ctrl(controls.begin(), controls.end());
    if (std::find(ctrl.begin(), ctrl.end(), target) != ctrl.end()) {
        throw std::invalid_argument("decompose_mcry target is also a control");
    }
    std::vector<GateOp> out;
    out.reserve(4);
    out.push_back(GateOp::ry(theta / 2.0, target));
    out.push_back(GateOp::mcx(ctrl, target));
    out.push_back(GateOp::ry(-theta / 2.0, target));
    out.push_back(GateOp::mcx(std::move(ctrl), target));
    return out;
}

}  // namespace qeb
