#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace qeb {

using Qubit = std::uint32_t;

enum class GateKind : std::uint8_t {
    H,
    X,
    Z,
    Ry,
    Rz,
    CX,
    MCX,
    MCRy,
    Barrier,
};

[[nodiscard]] std::string_view to_string(GateKind kind) noexcept;

/// True for kinds that carry a rotation angle.
[[nodiscard]] constexpr bool is_parametric(GateKind kind) noexcept {
    return kind == GateKind::Ry || kind == GateKind::Rz || kind == GateKind::MCRy;
}

/**
 * One circuit instruction.
 *
 * Single-qubit gates have one target and no controls. CX/MCX/MCRy have one
 * target and at least one control (CX exactly one). A Barrier lists every
 * spanned qubit as a target. Construct through the named factories, which
 * validate the kind-specific shape; qubit range is checked by Circuit::append.
 */
struct GateOp {
    GateKind kind = GateKind::H;
    double theta = 0.0;
    std::vector<Qubit> targets;
    std::vector<Qubit> controls;

    static GateOp h(Qubit q);
    static GateOp x(Qubit q);
    static GateOp z(Qubit q);
    static GateOp ry(double theta, Qubit q);
    static GateOp rz(double theta, Qubit q);
    static GateOp cx(Qubit control, Qubit target);
    static GateOp mcx(std::vector<Qubit> controls, Qubit target);
    static GateOp mcry(double theta, std::vector<Qubit> controls, Qubit target);
    static GateOp barrier(std::vector<Qubit> qubits);

    [[nodiscard]] bool is_barrier() const noexcept { return kind == GateKind::Barrier; }

    /// Number of qubits the gate acts on (controls + targets).
    [[nodiscard]] std::size_t arity() const noexcept { return targets.size() + controls.size(); }

    /// Non-barrier gate acting on two or more qubits.
    [[nodiscard]] bool is_multi_qubit() const noexcept { return !is_barrier() && arity() >= 2; }

    /// Controls followed by targets.
    [[nodiscard]] std::vector<Qubit> qubits() const;

    /// Checks the kind-specific invariants; throws std::invalid_argument.
    void validate() const;

    friend bool operator==(const GateOp&, const GateOp&) = default;
};

/// `<kind>(<theta?>) targets=[..] controls=[..]`
[[nodiscard]] std::string to_string(const GateOp& op);

/// Ordered instruction list over a fixed-width qubit register.
class Circuit {
public:
    explicit Circuit(std::size_t width);

    /// Appends a gate. Throws std::out_of_range for indices >= width and
    /// std::invalid_argument for malformed gates (repeated qubits, bad theta).
    Circuit& append(GateOp op);
    Circuit& append(std::span<const GateOp> ops);

    [[nodiscard]] std::size_t width() const noexcept { return width_; }
    [[nodiscard]] const std::vector<GateOp>& ops() const noexcept { return ops_; }
    [[nodiscard]] std::size_t size() const noexcept { return ops_.size(); }

    [[nodiscard]] auto begin() const noexcept { return ops_.begin(); }
    [[nodiscard]] auto end() const noexcept { return ops_.end(); }

    /// Number of non-barrier instructions.
    [[nodiscard]] std::size_t gate_count() const noexcept;
    [[nodiscard]] std::size_t multi_qubit_gate_count() const noexcept;

    /// One op per line in the to_string(GateOp) format. Debug output only.
    void dump(std::ostream& os) const;

private:
    std::size_t width_;
    std::vector<GateOp> ops_;
};

/**
 * ASAP layering of a circuit.
 *
 * Each gate lands in the earliest layer after every earlier gate sharing a
 * qubit with it. A barrier lifts all of its qubits to the latest layer among
 * them, so the next gate on any of them starts strictly later; the barrier
 * itself occupies no layer. Layers are numbered from 0.
 */
struct Layering {
    static constexpr std::size_t kNoLayer = static_cast<std::size_t>(-1);

    std::vector<std::size_t> layer_of_op;  // kNoLayer for barriers
    std::size_t depth = 0;
};

[[nodiscard]] Layering layering(const Circuit& circuit);
[[nodiscard]] std::size_t depth(const Circuit& circuit);
[[nodiscard]] inline std::size_t width(const Circuit& circuit) noexcept { return circuit.width(); }

/**
 * Multi-controlled Ry(theta) as Ry(theta/2), MCX, Ry(-theta/2), MCX on the
 * target. When all controls are |1> the MCX pair conjugates the second
 * rotation into Ry(+theta/2); otherwise the rotations cancel.
 */
[[nodiscard]] std::vector<GateOp> decompose_mcry(double theta, std::span<const Qubit> controls,
                                                 Qubit target);

}  // namespace qeb
