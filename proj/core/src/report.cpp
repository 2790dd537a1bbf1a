#include "qeb/report.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace qeb {

std::string format_double(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) {
        throw std::runtime_error("failed to format number");
    }
    return std::string(buf, ptr);
}

std::string csv_row(const ExperimentRecord& r) {
    std::string row;
    auto add = [&row](const std::string& cell) {
        if (!row.empty()) {
            row += ',';
        }
        row += cell;
    };
    add(std::string(to_string(r.encoding)));
    add(std::to_string(r.rows));
    add(std::to_string(r.cols));
    add(std::string(to_string(r.backend)));
    add(std::to_string(r.shots));
    add(std::to_string(r.seed));
    add(r.status());
    if (r.skipped()) {
        for (int i = 0; i < 14; ++i) {
            row += ',';
        }
        return row;
    }
    add(format_double(r.encode_time_s));
    add(format_double(r.simulate_time_s));
    add(format_double(r.decode_time_s));
    add(std::to_string(r.summary.width));
    add(std::to_string(r.summary.depth));
    add(std::to_string(r.summary.gate_count));
    add(format_double(r.precision_pct));
    add(format_double(r.mean_error));
    add(format_double(r.hellinger_fidelity));
    add(format_double(r.supermarq.communication));
    add(format_double(r.supermarq.critical_depth));
    add(format_double(r.supermarq.entanglement_ratio));
    add(format_double(r.supermarq.parallelism));
    add(format_double(r.supermarq.liveness));
    return row;
}

nlohmann::ordered_json to_json(const ExperimentRecord& r) {
    nlohmann::ordered_json j;
    j["encoding"] = to_string(r.encoding);
    j["rows"] = r.rows;
    j["cols"] = r.cols;
    j["backend"] = to_string(r.backend);
    j["shots"] = r.shots;
    j["seed"] = r.seed;
    j["status"] = r.status();
    const char* measured[] = {"encode_time_s", "simulate_time_s", "decode_time_s", "width", "depth",
                              "gate_count", "precision_pct", "mean_error", "hellinger_fidelity",
                              "communication", "critical_depth", "entanglement", "parallelism",
                              "liveness", "total_time_s"};
    if (r.skipped()) {
        for (const char* key : measured) {
            j[key] = nullptr;
        }
        return j;
    }
    j["encode_time_s"] = r.encode_time_s;
    j["simulate_time_s"] = r.simulate_time_s;
    j["decode_time_s"] = r.decode_time_s;
    j["width"] = r.summary.width;
    j["depth"] = r.summary.depth;
    j["gate_count"] = r.summary.gate_count;
    j["precision_pct"] = r.precision_pct;
    j["mean_error"] = r.mean_error;
    j["hellinger_fidelity"] = r.hellinger_fidelity;
    j["communication"] = r.supermarq.communication;
    j["critical_depth"] = r.supermarq.critical_depth;
    j["entanglement"] = r.supermarq.entanglement_ratio;
    j["parallelism"] = r.supermarq.parallelism;
    j["liveness"] = r.supermarq.liveness;
    j["total_time_s"] = r.total_time_s();
    return j;
}

ReportWriter::ReportWriter(const std::filesystem::path& path, ReportFormat format)
    : path_(path), out_(path), format_(format) {
    if (!out_) {
        throw std::runtime_error("cannot write report to " + path.string());
    }
    out_ << (format_ == ReportFormat::Csv ? kCsvHeader : "[") << '\n' << std::flush;
}

ReportWriter::~ReportWriter() {
    try {
        finish();
    } catch (...) {
    }
}

void ReportWriter::write(const ExperimentRecord& record) {
    if (finished_) {
        throw std::logic_error("report already finished");
    }
    if (format_ == ReportFormat::Csv) {
        out_ << csv_row(record) << '\n';
    } else {
        out_ << (written_ == 0 ? "" : ",\n") << to_json(record).dump();
    }
    ++written_;
    out_.flush();
    if (!out_) {
        throw std::runtime_error("failed writing report to " + path_.string());
    }
}

void ReportWriter::finish() {
    if (finished_) {
        return;
    }
    finished_ = true;
    if (format_ == ReportFormat::Json) {
        out_ << (written_ == 0 ? "]\n" : "\n]\n");
    }
    out_.flush();
    if (!out_) {
        throw std::runtime_error("failed writing report to " + path_.string());
    }
}

void write_report(std::ostream& out, std::span<const ExperimentRecord> records, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        out << kCsvHeader << '\n';
        for (const auto& r : records) {
            out << csv_row(r) << '\n';
        }
        return;
    }
    out << "[\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        out << (i == 0 ? "" : ",\n") << to_json(records[i]).dump();
    }
    out << (records.empty() ? "]\n" : "\n]\n");
}

void emit_report(std::span<const ExperimentRecord> records, ReportFormat format, const std::filesystem::path& path) {
    if (records.empty()) {
        throw std::invalid_argument("emit_report needs at least one record");
    }
    ReportWriter writer(path, format);
    for (const auto& r : records) {
        writer.write(r);
    }
    writer.finish();
}

std::filesystem::path write_gnuplot_script(const std::filesystem::path& csv_path) {
    auto script = csv_path;
    script.replace_extension(".gp");
    std::ofstream out(script);
    if (!out) {
        throw std::runtime_error("cannot write " + script.string());
    }
    const auto data = csv_path.filename().string();
    // Column numbers follow kCsvHeader: 1 encoding, 2 rows, 3 cols, 7 status,
    // 8 encode_time_s, 11 width, 12 depth.
    out << "# gnuplot script for " << data << "\n"
        << "set datafile separator ','\n"
        << "set key top left\n"
        << "set logscale y\n"
        << "set terminal pngcairo size 900,600\n"
        << "enc(e) = sprintf(\"< awk -F, 'NR > 1 && $1 == \\\"%s\\\" && $7 == \\\"ok\\\"' " << data << "\", e)\n"
        << "set xlabel 'pixels'\n"
        << "set ylabel 'encode time [s]'\n"
        << "set output '" << script.stem().string() << "_encode_time.png'\n"
        << "plot for [e in \"ql phase frqi\"] enc(e) using ($2*$3):8 with linespoints title e\n"
        << "set ylabel 'circuit depth'\n"
        << "set output '" << script.stem().string() << "_depth.png'\n"
        << "plot for [e in \"ql phase frqi\"] enc(e) using ($2*$3):12 with linespoints title e\n"
        << "unset logscale y\n"
        << "set ylabel 'circuit width'\n"
        << "set output '" << script.stem().string() << "_width.png'\n"
        << "plot for [e in \"ql phase frqi\"] enc(e) using ($2*$3):11 with linespoints title e\n";
    return script;
}

}  // namespace qeb
