#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qeb/noise.hpp"
#include "qeb/pipeline.hpp"

namespace qeb {

enum class Backend { StateVec, PureShots, NoisyShots };

/// "statevec", "pure", "noisy"
[[nodiscard]] std::string_view to_string(Backend backend) noexcept;
[[nodiscard]] std::optional<Backend> parse_backend(std::string_view name);

enum class ReportFormat { Csv, Json };

[[nodiscard]] std::string_view to_string(ReportFormat format) noexcept;
[[nodiscard]] std::optional<ReportFormat> parse_report_format(std::string_view name);

struct ImageSize {
    std::size_t rows = 0;
    std::size_t cols = 0;

    friend bool operator==(const ImageSize&, const ImageSize&) = default;
};

/// "4" (square) or "3x5" (rows x cols).
[[nodiscard]] std::optional<ImageSize> parse_size(std::string_view text);

/// Malformed configuration file or value.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
    std::vector<EncodingKind> encodings;
    std::vector<ImageSize> sizes;
    std::vector<Backend> backends;
    std::vector<std::uint64_t> shots_list;
    std::vector<std::uint64_t> seeds;
    NoiseConfig noise;
    bool invert = true;
    std::size_t max_qubits = SimulatorOptions{}.max_qubits;
    std::filesystem::path output;
    ReportFormat format = ReportFormat::Csv;
    std::size_t threads = 0;  ///< 0: hardware concurrency (QEB_THREADS still caps)
    bool gnuplot = false;

    /// Throws ConfigError for empty sweeps, zero shots, zero dimensions or
    /// out-of-range noise probabilities. Encoding/size compatibility is not
    /// checked here; run_experiment records incompatible cells as skipped.
    void validate() const;

    /// encodings x sizes x backends x shots x seeds
    [[nodiscard]] std::size_t cell_count() const noexcept;
};

/**
 * Parses the flat key/value config format:
 *
 *     # comment
 *     encodings = [ql, phase, frqi]
 *     sizes     = ["2x2", 3, "4x4"]
 *     backends  = [statevec, pure, noisy]
 *     shots     = [100, 10000]
 *     seeds     = [1, 2, 3]
 *     p1 = 0.01
 *     p2 = 0.01
 *     p_readout = 0.01
 *     invert = true
 *     max_qubits = 26
 *     output = "results.csv"
 *     format = csv
 *     threads = 0
 *     gnuplot = false
 *
 * Strings may be bare or double-quoted. Keys left out keep the defaults of
 * default_experiment_config(). Unknown keys and bad values throw ConfigError
 * naming the line.
 */
[[nodiscard]] ExperimentConfig parse_config(std::istream& in);
[[nodiscard]] ExperimentConfig load_config(const std::filesystem::path& path);

/// All three encodings over square sizes 2, 3, 4, 5, 8 and 16 on the
/// statevector backend with 10000 shots and seed 1. Cells an encoding cannot
/// represent (FRQI at odd sides, the lattice encodings past the qubit cap)
/// come out as skipped rows.
[[nodiscard]] ExperimentConfig default_experiment_config();

}  // namespace qeb
