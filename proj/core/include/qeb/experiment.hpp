#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qeb/config.hpp"
#include "qeb/image.hpp"
#include "qeb/metrics.hpp"
#include "qeb/pipeline.hpp"

namespace qeb {

/// Uniform pixels in [0, 255] from the seeded generator; identical across
/// platforms for a given (rows, cols, seed).
[[nodiscard]] GrayImage generate_image(std::size_t rows, std::size_t cols, std::uint64_t seed);

/// Seed for measurement sampling in a cell whose image uses `seed`.
[[nodiscard]] std::uint64_t sampling_seed(std::uint64_t seed) noexcept;

/// One row of a sweep. A skipped row has `skip_reason` set and no measurements.
struct ExperimentRecord {
    EncodingKind encoding = EncodingKind::QubitLattice;
    std::size_t rows = 0;
    std::size_t cols = 0;
    Backend backend = Backend::StateVec;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::optional<std::string> skip_reason;

    double encode_time_s = 0.0;
    double simulate_time_s = 0.0;
    double decode_time_s = 0.0;
    CircuitSummary summary;
    double precision_pct = 0.0;
    double mean_error = 0.0;
    double hellinger_fidelity = 0.0;
    SupermarqFeatures supermarq;

    [[nodiscard]] bool skipped() const noexcept { return skip_reason.has_value(); }
    /// "ok" or "skipped:<reason>"
    [[nodiscard]] std::string status() const;
    [[nodiscard]] double total_time_s() const noexcept { return encode_time_s + simulate_time_s + decode_time_s; }
};

/// Why a cell cannot run, or nullopt if it can.
[[nodiscard]] std::optional<std::string> skip_reason(EncodingKind kind, ImageSize size, std::size_t max_qubits);

/**
 * Runs one encode -> invert -> simulate -> decode -> measure cell.
 *
 * The image is generate_image(rows, cols, seed); sampling uses a seed derived
 * from `seed`. encode_time_s covers angle interpolation and circuit
 * construction only. Structural metrics (summary, SupermarQ features)
 * describe the encoding circuit, before the inversion gates. Correctness is
 * judged against 255 - pixel when `invert` is set, else against the pixel.
 */
[[nodiscard]] ExperimentRecord run_cell(EncodingKind kind, ImageSize size, Backend backend, std::uint64_t shots,
                                        std::uint64_t seed, const ExperimentConfig& config);

using RecordSink = std::function<void(const ExperimentRecord&)>;

/// Number of worker threads for a config: config.threads (or the hardware
/// concurrency when 0), capped by the QEB_THREADS environment variable.
[[nodiscard]] std::size_t effective_threads(const ExperimentConfig& config);

/**
 * Full Cartesian sweep in encodings x sizes x backends x shots x seeds order.
 *
 * Cells may run in parallel; `sink` (if given) still sees every record in
 * sweep order, as soon as it and all earlier records are done. Non-timing
 * fields do not depend on the thread count.
 */
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config, const RecordSink& sink = {});

}  // namespace qeb
