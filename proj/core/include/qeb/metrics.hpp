#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include <nlohmann/json.hpp>

#include "qeb/circuit.hpp"
#include "qeb/counts.hpp"
#include "qeb/image.hpp"
#include "qeb/pipeline.hpp"
#include "qeb/statevector.hpp"

namespace qeb {

struct CorrectnessReport {
    double precision_pct = 0.0;
    double mean_error = 0.0;
    std::vector<double> per_pixel_error;
    /// Pixels whose expected value was 0; their error is |observed| (denominator 1).
    std::size_t zero_expected_pixels = 0;
};

/**
 * precision = 100 * (#pixels equal) / (#pixels); per-pixel error
 * |observed - expected| / expected, with denominator 1 where expected is 0.
 * Throws std::invalid_argument on a dimension mismatch.
 */
[[nodiscard]] CorrectnessReport correctness(const GrayImage& expected, const ReconstructedImage& got);

/// (1 - H^2)^2 over the union of outcomes, H the Hellinger distance of the
/// normalized histograms. Throws std::invalid_argument for empty counts or
/// differing widths.
[[nodiscard]] double hellinger_fidelity(const Counts& a, const Counts& b);

/// Fidelity of sampled counts against the exact Born distribution of `ideal`.
/// Equivalent to comparing with counts of probability * shots for every outcome.
[[nodiscard]] double hellinger_fidelity(const Counts& sampled, const StateVector& ideal);

/// Undirected qubit graph; each multi-qubit gate joins every control to its target.
struct InteractionGraph {
    std::vector<std::set<Qubit>> adjacency;

    [[nodiscard]] std::size_t degree(Qubit q) const { return adjacency.at(q).size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept;
    [[nodiscard]] bool has_edge(Qubit a, Qubit b) const;
};

[[nodiscard]] InteractionGraph interaction_graph(const Circuit& circuit);

struct SupermarqFeatures {
    double communication = 0.0;
    double critical_depth = 0.0;
    double entanglement_ratio = 0.0;
    double parallelism = 0.0;
    double liveness = 0.0;

    friend bool operator==(const SupermarqFeatures&, const SupermarqFeatures&) = default;
};

/**
 * Structural features of the logical circuit (no transpilation), with
 * N = width, n_t = non-barrier gates, n = multi-qubit gates, d = depth:
 *
 *   communication   sum of interaction-graph degrees / (N (N - 1))
 *   critical_depth  n_l / n, n_l the largest number of multi-qubit gates on
 *                   one path of the qubit-sharing dependency DAG
 *   entanglement    n / n_t
 *   parallelism     (n_t / d - 1) / (N - 1), clamped to [0, 1]
 *   liveness        active (qubit, layer) cells / (N d)
 *
 * Features whose denominator vanishes are 0.
 */
[[nodiscard]] SupermarqFeatures supermarq(const Circuit& circuit);

/// Parallelism before clamping; at most 1 for ASAP depth since n_t <= N d.
[[nodiscard]] double parallelism_unclamped(const Circuit& circuit);

struct CircuitSummary {
    std::size_t width = 0;
    std::size_t depth = 0;
    std::size_t gate_count = 0;
    std::size_t multiqubit_gate_count = 0;

    friend bool operator==(const CircuitSummary&, const CircuitSummary&) = default;
};

[[nodiscard]] CircuitSummary circuit_summary(const Circuit& circuit);

void to_json(nlohmann::json& j, const CorrectnessReport& r);
void to_json(nlohmann::json& j, const SupermarqFeatures& f);
void to_json(nlohmann::json& j, const CircuitSummary& s);

}  // namespace qeb
