// qeb: command-line harness for the quantum image encoding benchmarks.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include <nlohmann/json.hpp>

#include "qeb/config.hpp"
#include "qeb/encoders.hpp"
#include "qeb/errors.hpp"
#include "qeb/experiment.hpp"
#include "qeb/metrics.hpp"
#include "qeb/noise.hpp"
#include "qeb/pipeline.hpp"
#include "qeb/report.hpp"
#include "qeb/statevector.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

/// Raised for invalid flag combinations the parser cannot express.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ImageArgs {
    std::size_t size = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::string input;
    std::uint64_t seed = 1;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--size", size, "Square image side (n for an n x n image)");
        cmd->add_option("--rows", rows, "Image rows (with --cols)");
        cmd->add_option("--cols", cols, "Image columns (with --rows)");
        cmd->add_option("--input", input, "Read the image from a .pgm (P2) or .csv file")->check(CLI::ExistingFile);
        cmd->add_option("--seed", seed, "Seed for the random image and for sampling")->capture_default_str();
    }

    [[nodiscard]] qeb::GrayImage load() const {
        if (!input.empty()) {
            return qeb::load_image(input);
        }
        std::size_t r = rows;
        std::size_t c = cols;
        if (size != 0) {
            r = c = size;
        }
        if (r == 0 || c == 0) {
            throw UsageError("give --size, --rows/--cols or --input");
        }
        return qeb::generate_image(r, c, seed);
    }
};

qeb::EncodingKind encoding_from(const std::string& name) {
    const auto kind = qeb::parse_encoding(name);
    if (!kind) {
        throw UsageError("unknown encoding '" + name + "' (ql, phase, frqi)");
    }
    return *kind;
}

// --- encode ----------------------------------------------------------------

struct EncodeArgs {
    std::string encoding;
    ImageArgs image;
    std::string dump_state;
    bool dump_circuit = false;
    std::size_t max_qubits = qeb::SimulatorOptions{}.max_qubits;
};

int run_encode(const EncodeArgs& args) {
    const auto kind = encoding_from(args.encoding);
    const auto image = args.image.load();
    const qeb::SimulatorOptions options{args.max_qubits};
    const auto circuit = qeb::encode(image, kind, options);

    nlohmann::json out;
    out["encoding"] = qeb::to_string(kind);
    out["rows"] = image.rows();
    out["cols"] = image.cols();
    out["summary"] = qeb::circuit_summary(circuit);
    std::cout << out.dump(2) << '\n';

    if (args.dump_circuit) {
        circuit.dump(std::cout);
    }
    if (!args.dump_state.empty()) {
        const auto state = qeb::run_statevector(circuit, options);
        nlohmann::json amps = nlohmann::json::array();
        for (const auto& a : state.amplitudes()) {
            amps.push_back({a.real(), a.imag()});
        }
        std::ofstream file(args.dump_state);
        if (!file) {
            throw std::runtime_error("cannot write " + args.dump_state);
        }
        file << nlohmann::json{{"num_qubits", state.num_qubits()}, {"amplitudes", amps}}.dump() << '\n';
    }
    return 0;
}

// --- roundtrip -------------------------------------------------------------

struct RoundtripArgs {
    std::string encoding;
    ImageArgs image;
    std::string backend = "statevec";
    std::uint64_t shots = 10000;
    bool no_invert = false;
    qeb::NoiseConfig noise;
    std::string output;
    std::size_t max_qubits = qeb::SimulatorOptions{}.max_qubits;
};

int run_roundtrip(const RoundtripArgs& args) {
    const auto kind = encoding_from(args.encoding);
    const auto backend = qeb::parse_backend(args.backend);
    if (!backend) {
        throw UsageError("unknown backend '" + args.backend + "' (statevec, pure, noisy)");
    }
    if (args.shots == 0) {
        throw UsageError("--shots must be at least 1");
    }
    const auto image = args.image.load();
    const qeb::SimulatorOptions options{args.max_qubits};
    const auto circuit = qeb::encode(image, kind, options);
    const bool invert = !args.no_invert;
    const auto executed = invert ? qeb::apply_inversion(circuit, kind) : circuit;
    const auto expected = invert ? image.inverted() : image;

    std::optional<qeb::ReconstructedImage> decoded;
    std::optional<double> fidelity;
    const auto seed = qeb::sampling_seed(args.image.seed);
    switch (*backend) {
        case qeb::Backend::StateVec:
            decoded = qeb::decode_from_statevector(qeb::run_statevector(executed, options), kind, image.rows(),
                                                   image.cols());
            break;
        case qeb::Backend::PureShots: {
            const auto state = qeb::run_statevector(executed, options);
            const auto counts = qeb::sample_counts(state, args.shots, seed);
            decoded = qeb::decode(counts, kind, image.rows(), image.cols());
            fidelity = qeb::hellinger_fidelity(counts, state);
            break;
        }
        case qeb::Backend::NoisyShots: {
            const auto counts = qeb::run_noisy(executed, args.noise, args.shots, seed, options);
            decoded = qeb::decode(counts, kind, image.rows(), image.cols());
            fidelity = qeb::hellinger_fidelity(counts, qeb::run_statevector(executed, options));
            break;
        }
    }

    const auto report = qeb::correctness(expected, *decoded);
    nlohmann::json out = report;
    out.erase("per_pixel_error");
    out["encoding"] = qeb::to_string(kind);
    out["backend"] = qeb::to_string(*backend);
    out["rows"] = image.rows();
    out["cols"] = image.cols();
    out["inverted"] = invert;
    out["unobserved_pixels"] = decoded->unobserved_count();
    if (fidelity) {
        out["hellinger_fidelity"] = *fidelity;
    }
    std::cout << out.dump(2) << '\n';

    if (!args.output.empty()) {
        qeb::save_image(args.output, decoded->to_image());
    }
    return 0;
}

// --- metrics ---------------------------------------------------------------

struct MetricsArgs {
    std::string encoding;
    ImageArgs image;
    std::size_t max_qubits = qeb::SimulatorOptions{}.max_qubits;
};

int run_metrics(const MetricsArgs& args) {
    const auto kind = encoding_from(args.encoding);
    const auto image = args.image.load();
    const auto circuit = qeb::encode(image, kind, qeb::SimulatorOptions{args.max_qubits});
    nlohmann::json out;
    out["encoding"] = qeb::to_string(kind);
    out["rows"] = image.rows();
    out["cols"] = image.cols();
    out["summary"] = qeb::circuit_summary(circuit);
    out["supermarq"] = qeb::supermarq(circuit);
    std::cout << out.dump(2) << '\n';
    return 0;
}

// --- gen -------------------------------------------------------------------

struct GenArgs {
    std::size_t size = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::uint64_t seed = 1;
    std::string output;
};

int run_gen(const GenArgs& args) {
    std::size_t r = args.rows;
    std::size_t c = args.cols;
    if (args.size != 0) {
        r = c = args.size;
    }
    if (r == 0 || c == 0) {
        throw UsageError("give --size or --rows/--cols");
    }
    qeb::save_image(args.output, qeb::generate_image(r, c, args.seed));
    std::cout << "wrote " << r << "x" << c << " image to " << args.output << '\n';
    return 0;
}

// --- bench -----------------------------------------------------------------

struct BenchArgs {
    std::string config;
    std::string output;
    std::string format;
    std::optional<std::size_t> threads;
    std::vector<std::string> encodings;
    std::vector<std::string> sizes;
    std::vector<std::string> backends;
    std::vector<std::uint64_t> shots;
    std::vector<std::uint64_t> seeds;
    bool gnuplot = false;
    bool no_invert = false;
    bool quiet = false;
};

int run_bench(const BenchArgs& args) {
    auto config = args.config.empty() ? qeb::default_experiment_config() : qeb::load_config(args.config);

    if (!args.output.empty()) {
        config.output = args.output;
    }
    if (!args.format.empty()) {
        const auto f = qeb::parse_report_format(args.format);
        if (!f) {
            throw UsageError("--format must be csv or json");
        }
        config.format = *f;
    }
    if (args.threads) {
        config.threads = *args.threads;
    }
    if (!args.encodings.empty()) {
        config.encodings.clear();
        for (const auto& e : args.encodings) {
            config.encodings.push_back(encoding_from(e));
        }
    }
    if (!args.sizes.empty()) {
        config.sizes.clear();
        for (const auto& s : args.sizes) {
            const auto size = qeb::parse_size(s);
            if (!size) {
                throw UsageError("bad size '" + s + "'");
            }
            config.sizes.push_back(*size);
        }
    }
    if (!args.backends.empty()) {
        config.backends.clear();
        for (const auto& b : args.backends) {
            const auto backend = qeb::parse_backend(b);
            if (!backend) {
                throw UsageError("unknown backend '" + b + "'");
            }
            config.backends.push_back(*backend);
        }
    }
    if (!args.shots.empty()) {
        config.shots_list = args.shots;
    }
    if (!args.seeds.empty()) {
        config.seeds = args.seeds;
    }
    if (args.gnuplot) {
        config.gnuplot = true;
    }
    if (args.no_invert) {
        config.invert = false;
    }
    config.validate();

    qeb::ReportWriter writer(config.output, config.format);
    std::size_t done = 0;
    std::size_t skipped = 0;
    const std::size_t total = config.cell_count();
    qeb::run_experiment(config, [&](const qeb::ExperimentRecord& r) {
        writer.write(r);
        ++done;
        skipped += r.skipped() ? 1 : 0;
        if (!args.quiet) {
            std::cerr << "[" << done << "/" << total << "] " << qeb::to_string(r.encoding) << ' ' << r.rows << 'x'
                      << r.cols << ' ' << qeb::to_string(r.backend) << " shots=" << r.shots << " seed=" << r.seed
                      << ' ' << r.status() << '\n';
        }
    });
    writer.finish();

    std::cout << "wrote " << done << " rows (" << skipped << " skipped) to " << config.output.string() << '\n';
    if (config.gnuplot) {
        if (config.format != qeb::ReportFormat::Csv) {
            std::cerr << "note: --gnuplot needs CSV output; no script written\n";
        } else {
            std::cout << "gnuplot script: " << qeb::write_gnuplot_script(config.output).string() << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Benchmarks classical-to-quantum image encodings on a statevector simulator"};
    app.require_subcommand(1);

    EncodeArgs encode_args;
    auto* encode = app.add_subcommand("encode", "Encode one image and print the circuit summary");
    encode->add_option("--encoding,-e", encode_args.encoding, "ql, phase or frqi")->required();
    encode_args.image.add_to(encode);
    encode->add_option("--dump-state", encode_args.dump_state, "Write the encoded statevector as JSON");
    encode->add_flag("--dump-circuit", encode_args.dump_circuit, "Print one gate per line");
    encode->add_option("--max-qubits", encode_args.max_qubits, "Simulation cap")->capture_default_str();

    RoundtripArgs rt_args;
    auto* roundtrip = app.add_subcommand("roundtrip", "Encode, invert, simulate and decode one image");
    roundtrip->add_option("--encoding,-e", rt_args.encoding, "ql, phase or frqi")->required();
    rt_args.image.add_to(roundtrip);
    roundtrip->add_option("--backend,-b", rt_args.backend, "statevec, pure or noisy")->capture_default_str();
    roundtrip->add_option("--shots", rt_args.shots, "Shots for the sampling backends")->capture_default_str();
    roundtrip->add_flag("--no-invert", rt_args.no_invert, "Skip the pixel inversion");
    roundtrip->add_option("--p1", rt_args.noise.p1, "Single-qubit depolarizing probability")
        ->check(CLI::Range(0.0, 1.0));
    roundtrip->add_option("--p2", rt_args.noise.p2, "Multi-qubit depolarizing probability")
        ->check(CLI::Range(0.0, 1.0));
    roundtrip->add_option("--p-readout", rt_args.noise.p_readout, "Readout flip probability")
        ->check(CLI::Range(0.0, 1.0));
    roundtrip->add_option("--output,-o", rt_args.output, "Write the reconstruction (.pgm or .csv)");
    roundtrip->add_option("--max-qubits", rt_args.max_qubits, "Simulation cap")->capture_default_str();

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Run a parameter sweep and write a CSV/JSON report");
    bench->add_option("--config,-c", bench_args.config, "Key/value sweep configuration")->check(CLI::ExistingFile);
    bench->add_option("--output,-o", bench_args.output, "Report path (overrides the config)");
    bench->add_option("--format,-f", bench_args.format, "csv or json (overrides the config)");
    bench->add_option("--threads,-j", bench_args.threads, "Worker threads (QEB_THREADS caps this)");
    bench->add_option("--encodings", bench_args.encodings, "Encodings to sweep");
    bench->add_option("--sizes", bench_args.sizes, "Sizes to sweep, e.g. 4 or 3x5");
    bench->add_option("--backends", bench_args.backends, "Backends to sweep");
    bench->add_option("--shots", bench_args.shots, "Shot counts to sweep");
    bench->add_option("--seeds", bench_args.seeds, "Seeds to sweep");
    bench->add_flag("--gnuplot", bench_args.gnuplot, "Also write a gnuplot script next to the CSV");
    bench->add_flag("--no-invert", bench_args.no_invert, "Skip the pixel inversion");
    bench->add_flag("--quiet,-q", bench_args.quiet, "No per-row progress on stderr");

    MetricsArgs metrics_args;
    auto* metrics = app.add_subcommand("metrics", "Print SupermarQ features and circuit summary");
    metrics->add_option("--encoding,-e", metrics_args.encoding, "ql, phase or frqi")->required();
    metrics_args.image.add_to(metrics);
    metrics->add_option("--max-qubits", metrics_args.max_qubits, "Simulation cap")->capture_default_str();

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "Write a random grayscale image");
    gen->add_option("--size", gen_args.size, "Square image side");
    gen->add_option("--rows", gen_args.rows, "Image rows");
    gen->add_option("--cols", gen_args.cols, "Image columns");
    gen->add_option("--seed", gen_args.seed, "Generator seed")->capture_default_str();
    gen->add_option("--output,-o", gen_args.output, "Output path (.pgm or .csv)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*encode) {
            return run_encode(encode_args);
        }
        if (*roundtrip) {
            return run_roundtrip(rt_args);
        }
        if (*bench) {
            return run_bench(bench_args);
        }
        if (*metrics) {
            return run_metrics(metrics_args);
        }
        if (*gen) {
            return run_gen(gen_args);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const qeb::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
