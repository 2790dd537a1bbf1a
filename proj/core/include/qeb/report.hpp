#pragma once

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "qeb/config.hpp"
#include "qeb/experiment.hpp"

namespace qeb {

/// Column order of the CSV report.
inline constexpr const char* kCsvHeader =
    "encoding,rows,cols,backend,shots,seed,status,encode_time_s,simulate_time_s,decode_time_s,"
    "width,depth,gate_count,precision_pct,mean_error,hellinger_fidelity,"
    "communication,critical_depth,entanglement,parallelism,liveness";

/// Columns holding wall-clock measurements (excluded from determinism checks).
inline constexpr const char* kTimingFields[] = {"encode_time_s", "simulate_time_s", "decode_time_s", "total_time_s"};

/// Shortest decimal that round-trips the double.
[[nodiscard]] std::string format_double(double value);

/// One CSV row (no trailing newline). Skipped rows leave measurement cells empty.
[[nodiscard]] std::string csv_row(const ExperimentRecord& record);

/// Flat object with the CSV column names plus total_time_s; measurements are
/// null on skipped rows.
[[nodiscard]] nlohmann::ordered_json to_json(const ExperimentRecord& record);

/**
 * Writes records to a file as they arrive and flushes after each one, so an
 * interrupted sweep leaves every finished row on disk. JSON output is an
 * array with one record per line; finish() closes it.
 */
class ReportWriter {
public:
    ReportWriter(const std::filesystem::path& path, ReportFormat format);
    ReportWriter(const ReportWriter&) = delete;
    ReportWriter& operator=(const ReportWriter&) = delete;
    ~ReportWriter();

    void write(const ExperimentRecord& record);
    void finish();

private:
    std::filesystem::path path_;
    std::ofstream out_;
    ReportFormat format_;
    std::size_t written_ = 0;
    bool finished_ = false;
};

/// Whole-report variants. emit_report throws std::invalid_argument for an
/// empty record list and std::runtime_error when the path is not writable.
void write_report(std::ostream& out, std::span<const ExperimentRecord> records, ReportFormat format);
void emit_report(std::span<const ExperimentRecord> records, ReportFormat format, const std::filesystem::path& path);

/// Writes a gnuplot script next to a CSV report plotting encode time against
/// pixel count and circuit depth/width per encoding. Returns the script path.
std::filesystem::path write_gnuplot_script(const std::filesystem::path& csv_path);

}  // namespace qeb
