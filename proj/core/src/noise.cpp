#include "qeb/noise.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qeb/errors.hpp"

namespace qeb {

namespace {

enum class Pauli : std::uint8_t { X = 1, Y = 2, Z = 3 };

struct ErrorEvent {
    std::uint32_t after_op;  // index into the gate list
    Qubit qubit;
    Pauli pauli;

    auto operator<=>(const ErrorEvent&) const = default;
};

using Pattern = std::vector<ErrorEvent>;

const Mat2& pauli_matrix(Pauli p) {
    static const Mat2 x{Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{0, 0}};
    static const Mat2 y{Complex{0, 0}, Complex{0, -1}, Complex{0, 1}, Complex{0, 0}};
    static const Mat2 z{Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{-1, 0}};
    switch (p) {
        case Pauli::X: return x;
        case Pauli::Y: return y;
        case Pauli::Z: break;
    }
    return z;
}

Pauli random_pauli(Rng& rng) { return static_cast<Pauli>(1 + rng.below(3)); }

/// Steps through positions that fire with probability p each, skipping
/// geometrically distributed gaps instead of drawing once per position.
class FiringSequence {
public:
    FiringSequence(double p, std::size_t length, Rng& rng) : p_(p), length_(length), rng_(rng) {
        log_q_ = p_ < 1.0 ? std::log1p(-p_) : 0.0;
        pos_ = p_ <= 0.0 ? length_ : gap();
    }

    [[nodiscard]] bool done() const noexcept { return pos_ >= length_; }
    [[nodiscard]] std::size_t position() const noexcept { return pos_; }
    void advance() { pos_ += 1 + gap(); }

private:
    std::size_t gap() {
        if (p_ >= 1.0) {
            return 0;
        }
        const double u = 1.0 - rng_.uniform();  // (0, 1]
        const double g = std::floor(std::log(u) / log_q_);
        return g >= static_cast<double>(length_) ? length_ : static_cast<std::size_t>(g);
    }

    double p_;
    std::size_t length_;
    Rng& rng_;
    double log_q_ = 0.0;
    std::size_t pos_ = 0;
};

/// Buffers single-qubit matrices per qubit and applies each product only
/// when a multi-qubit gate touches that qubit or the run ends.
class FusedApplier {
public:
    explicit FusedApplier(StateVector& state) : state_(state), pending_(state.num_qubits()) {}

    void local(const Mat2& m, Qubit q) {
        auto& p = pending_[q];
        p = p ? multiply(m, *p) : m;
    }

    void gate(const GateOp& op) {
        if (op.arity() == 1) {
            local(gate_matrix(op.kind, op.theta), op.targets.front());
            return;
        }
        for (Qubit q : op.qubits()) {
            flush(q);
        }
        state_.apply(op);
    }

    void finish() {
        for (Qubit q = 0; q < pending_.size(); ++q) {
            flush(q);
        }
    }

private:
    static Mat2 multiply(const Mat2& a, const Mat2& b) {
        return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
    }

    void flush(Qubit q) {
        if (pending_[q]) {
            state_.apply_matrix(*pending_[q], q);
            pending_[q].reset();
        }
    }

    StateVector& state_;
    std::vector<std::optional<Mat2>> pending_;
};

void apply_readout(Counts& out, Counts::Outcome outcome, std::uint64_t n, std::size_t bits, double p,
                   Rng& rng) {
    if (p <= 0.0) {
        out.add(outcome, n);
        return;
    }
    for (std::uint64_t s = 0; s < n; ++s) {
        Counts::Outcome flipped = outcome;
        for (std::size_t b = 0; b < bits; ++b) {
            if (rng.bernoulli(p)) {
                flipped ^= Counts::Outcome{1} << b;
            }
        }
        out.add(flipped, 1);
    }
}

/// Product-state path: no gate couples qubits, so every qubit is an
/// independent two-level trajectory.
Counts run_factorized(const Circuit& circuit, const NoiseConfig& noise, std::uint64_t shots, Rng& rng) {
    std::vector<std::vector<Mat2>> per_qubit(circuit.width());
    for (const auto& op : circuit) {
        if (!op.is_barrier()) {
            per_qubit[op.targets.front()].push_back(gate_matrix(op.kind, op.theta));
        }
    }
    Counts counts(circuit.width());
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        Counts::Outcome outcome = 0;
        for (Qubit q = 0; q < circuit.width(); ++q) {
            Complex a0{1.0, 0.0};
            Complex a1{0.0, 0.0};
            for (const auto& m : per_qubit[q]) {
                const Complex b0 = m[0] * a0 + m[1] * a1;
                const Complex b1 = m[2] * a0 + m[3] * a1;
                a0 = b0;
                a1 = b1;
                if (rng.bernoulli(noise.p1)) {
                    const auto& e = pauli_matrix(random_pauli(rng));
                    const Complex c0 = e[0] * a0 + e[1] * a1;
                    const Complex c1 = e[2] * a0 + e[3] * a1;
                    a0 = c0;
                    a1 = c1;
                }
            }
            const double p_one = std::norm(a1) / (std::norm(a0) + std::norm(a1));
            bool bit = rng.uniform() < p_one;
            if (rng.bernoulli(noise.p_readout)) {
                bit = !bit;
            }
            if (bit) {
                outcome |= Counts::Outcome{1} << q;
            }
        }
        counts.add(outcome, 1);
    }
    return counts;
}

}  // namespace

void NoiseConfig::validate() const {
    auto check = [](double p, const char* name) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
        }
    };
    check(p1, "p1");
    check(p2, "p2");
    check(p_readout, "p_readout");
}

Counts run_noisy(const Circuit& circuit, const NoiseConfig& noise, std::uint64_t shots, std::uint64_t seed,
                 const SimulatorOptions& options) {
    noise.validate();
    if (shots == 0) {
        throw std::invalid_argument("shots must be at least 1");
    }
    if (circuit.width() > options.max_qubits) {
        throw ResourceError("circuit width " + std::to_string(circuit.width()) +
                            " exceeds simulation cap of " + std::to_string(options.max_qubits) +
                            " qubits");
    }
    Rng rng(seed);

    if (circuit.multi_qubit_gate_count() == 0 && noise.p1 > 0.0) {
        return run_factorized(circuit, noise, shots, rng);
    }

    std::vector<const GateOp*> gates;
    std::vector<std::uint32_t> single_idx;
    std::vector<std::uint32_t> multi_idx;
    for (const auto& op : circuit) {
        if (op.is_barrier()) {
            continue;
        }
        const auto idx = static_cast<std::uint32_t>(gates.size());
        (op.arity() == 1 ? single_idx : multi_idx).push_back(idx);
        gates.push_back(&op);
    }

    std::map<Pattern, std::uint64_t> groups;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        Pattern pattern;
        for (FiringSequence f(noise.p1, single_idx.size(), rng); !f.done(); f.advance()) {
            const auto idx = single_idx[f.position()];
            pattern.push_back({idx, gates[idx]->targets.front(), random_pauli(rng)});
        }
        for (FiringSequence f(noise.p2, multi_idx.size(), rng); !f.done(); f.advance()) {
            const auto idx = multi_idx[f.position()];
            for (Qubit q : gates[idx]->qubits()) {
                pattern.push_back({idx, q, random_pauli(rng)});
            }
        }
        std::sort(pattern.begin(), pattern.end());
        ++groups[std::move(pattern)];
    }

    Counts counts(circuit.width());
    const std::size_t bits = circuit.width();

    // Patterns are visited in order of their first error, so one ideal
    // prefix state sweeps forward and each trajectory only simulates its tail.
    std::optional<StateVector> prefix;
    std::size_t prefix_len = 0;
    for (const auto& [pattern, n] : groups) {
        if (pattern.empty()) {
            continue;
        }
        const std::size_t first = pattern.front().after_op;
        if (!prefix) {
            prefix.emplace(circuit.width());
        }
        while (prefix_len <= first) {
            prefix->apply(*gates[prefix_len++]);
        }
        StateVector state = *prefix;
        FusedApplier tail(state);
        std::size_t event = 0;
        for (std::size_t k = first;; ++k) {
            while (event < pattern.size() && pattern[event].after_op == k) {
                tail.local(pauli_matrix(pattern[event].pauli), pattern[event].qubit);
                ++event;
            }
            if (k + 1 >= gates.size()) {
                break;
            }
            tail.gate(*gates[k + 1]);
        }
        tail.finish();
        const Counts ideal = sample_counts(state, n, rng);
        for (const auto& [outcome, hits] : ideal) {
            apply_readout(counts, outcome, hits, bits, noise.p_readout, rng);
        }
    }
    if (const auto it = groups.find(Pattern{}); it != groups.end()) {
        const StateVector state = run_statevector(circuit, options);
        const Counts ideal = sample_counts(state, it->second, rng);
        for (const auto& [outcome, hits] : ideal) {
            apply_readout(counts, outcome, hits, bits, noise.p_readout, rng);
        }
    }
    return counts;
}

}  // namespace qeb
