#include "qeb/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qeb {

CorrectnessReport correctness(const GrayImage& expected, const ReconstructedImage& got) {
    if (expected.rows() != got.rows || expected.cols() != got.cols || got.values.size() != expected.size()) {
        throw std::invalid_argument("correctness: expected " + std::to_string(expected.rows()) + "x" +
                                    std::to_string(expected.cols()) + ", got " + std::to_string(got.rows) + "x" +
                                    std::to_string(got.cols));
    }
    CorrectnessReport report;
    report.per_pixel_error.reserve(expected.size());
    std::size_t exact = 0;
    double error_sum = 0.0;
    const auto pixels = expected.pixels();
    for (std::size_t i = 0; i < pixels.size(); ++i) {
        const int want = pixels[i];
        const int have = got.values[i];
        if (want == have) {
            ++exact;
        }
        if (want == 0) {
            ++report.zero_expected_pixels;
        }
        const double denominator = want == 0 ? 1.0 : static_cast<double>(want);
        const double e = std::abs(have - want) / denominator;
        report.per_pixel_error.push_back(e);
        error_sum += e;
    }
    const auto n = static_cast<double>(pixels.size());
    report.precision_pct = 100.0 * static_cast<double>(exact) / n;
    report.mean_error = error_sum / n;
    return report;
}

double hellinger_fidelity(const Counts& a, const Counts& b) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("hellinger_fidelity needs non-empty counts");
    }
    if (a.num_bits() != b.num_bits()) {
        throw std::invalid_argument("hellinger_fidelity: counts have different widths");
    }
    const double ta = static_cast<double>(a.total());
    const double tb = static_cast<double>(b.total());
    double sum = 0.0;
    auto ia = a.begin();
    auto ib = b.begin();
    // Merge over the union of the two sorted key sets.
    while (ia != a.end() || ib != b.end()) {
        double p = 0.0;
        double q = 0.0;
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            p = static_cast<double>(ia->second) / ta;
            ++ia;
        } else if (ia == a.end() || ib->first < ia->first) {
            q = static_cast<double>(ib->second) / tb;
            ++ib;
        } else {
            p = static_cast<double>(ia->second) / ta;
            q = static_cast<double>(ib->second) / tb;
            ++ia;
            ++ib;
        }
        const double d = std::sqrt(p) - std::sqrt(q);
        sum += d * d;
    }
    const double h2 = std::clamp(sum / 2.0, 0.0, 1.0);
    return (1.0 - h2) * (1.0 - h2);
}

double hellinger_fidelity(const Counts& sampled, const StateVector& ideal) {
    if (sampled.empty()) {
        throw std::invalid_argument("hellinger_fidelity needs non-empty counts");
    }
    if (sampled.num_bits() != ideal.num_qubits()) {
        throw std::invalid_argument("hellinger_fidelity: counts width differs from state width");
    }
    // 1 - H^2 is the Bhattacharyya coefficient, which only has support on
    // outcomes present in both distributions.
    const double ts = static_cast<double>(sampled.total());
    const double norm = ideal.norm_squared();
    double bc = 0.0;
    for (const auto& [outcome, n] : sampled) {
        const double p = static_cast<double>(n) / ts;
        const double q = std::norm(ideal[outcome]) / norm;
        bc += std::sqrt(p * q);
    }
    bc = std::clamp(bc, 0.0, 1.0);
    return bc * bc;
}

std::size_t InteractionGraph::edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& nbrs : adjacency) {
        twice += nbrs.size();
    }
    return twice / 2;
}

bool InteractionGraph::has_edge(Qubit a, Qubit b) const { return adjacency.at(a).contains(b); }

InteractionGraph interaction_graph(const Circuit& circuit) {
    InteractionGraph g;
    g.adjacency.resize(circuit.width());
    for (const auto& op : circuit) {
        if (!op.is_multi_qubit()) {
            continue;
        }
        for (Qubit t : op.targets) {
            for (Qubit c : op.controls) {
                g.adjacency[t].insert(c);
                g.adjacency[c].insert(t);
            }
        }
    }
    return g;
}

namespace {

/// Most multi-qubit gates on any path of the dependency DAG.
std::size_t multi_qubit_critical_path(const Circuit& circuit) {
    // best[q]: the best count over paths ending at the latest gate on q.
    // Along one qubit's chain this value never decreases, so the latest gate
    // on each operand dominates all of its predecessors.
    std::vector<std::size_t> best(circuit.width(), 0);
    std::size_t longest = 0;
    for (const auto& op : circuit) {
        if (op.is_barrier()) {
            continue;
        }
        const auto qs = op.qubits();
        std::size_t here = 0;
        for (Qubit q : qs) {
            here = std::max(here, best[q]);
        }
        here += op.is_multi_qubit() ? 1 : 0;
        for (Qubit q : qs) {
            best[q] = here;
        }
        longest = std::max(longest, here);
    }
    return longest;
}

}  // namespace

double parallelism_unclamped(const Circuit& circuit) {
    const auto n_qubits = static_cast<double>(circuit.width());
    const auto n_gates = static_cast<double>(circuit.gate_count());
    const auto d = static_cast<double>(depth(circuit));
    if (circuit.width() < 2 || d == 0.0) {
        return 0.0;
    }
    return (n_gates / d - 1.0) / (n_qubits - 1.0);
}

SupermarqFeatures supermarq(const Circuit& circuit) {
    SupermarqFeatures f;
    const std::size_t width = circuit.width();
    const auto n_qubits = static_cast<double>(width);
    const std::size_t n_total = circuit.gate_count();
    const std::size_t n_multi = circuit.multi_qubit_gate_count();
    const auto layers = layering(circuit);

    if (width >= 2) {
        const auto graph = interaction_graph(circuit);
        double degree_sum = 0.0;
        for (Qubit q = 0; q < width; ++q) {
            degree_sum += static_cast<double>(graph.degree(q));
        }
        f.communication = degree_sum / (n_qubits * (n_qubits - 1.0));
    }
    if (n_multi > 0) {
        f.critical_depth =
            static_cast<double>(multi_qubit_critical_path(circuit)) / static_cast<double>(n_multi);
    }
    if (n_total > 0) {
        f.entanglement_ratio = static_cast<double>(n_multi) / static_cast<double>(n_total);
    }
    f.parallelism = std::clamp(parallelism_unclamped(circuit), 0.0, 1.0);
    if (layers.depth > 0) {
        // Gates sharing a layer never share a qubit, so every operand of every
        // gate is a distinct (qubit, layer) cell.
        double active = 0.0;
        for (const auto& op : circuit) {
            if (!op.is_barrier()) {
                active += static_cast<double>(op.arity());
            }
        }
        f.liveness = active / (n_qubits * static_cast<double>(layers.depth));
    }
    return f;
}

CircuitSummary circuit_summary(const Circuit& circuit) {
    return {circuit.width(), depth(circuit), circuit.gate_count(), circuit.multi_qubit_gate_count()};
}

void to_json(nlohmann::json& j, const CorrectnessReport& r) {
    j = nlohmann::json{{"precision_pct", r.precision_pct},
                       {"mean_error", r.mean_error},
                       {"zero_expected_pixels", r.zero_expected_pixels},
                       {"per_pixel_error", r.per_pixel_error}};
}

void to_json(nlohmann::json& j, const SupermarqFeatures& f) {
    j = nlohmann::json{{"communication", f.communication},
                       {"critical_depth", f.critical_depth},
                       {"entanglement_ratio", f.entanglement_ratio},
                       {"parallelism", f.parallelism},
                       {"liveness", f.liveness}};
}

void to_json(nlohmann::json& j, const CircuitSummary& s) {
    j = nlohmann::json{{"width", s.width},
                       {"depth", s.depth},
                       {"gate_count", s.gate_count},
                       {"multiqubit_gate_count", s.multiqubit_gate_count}};
}

}  // namespace qeb
