#include "qeb/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "qeb/encoders.hpp"
#include "qeb/noise.hpp"
#include "qeb/random.hpp"
#include "qeb/statevector.hpp"

namespace qeb {

namespace {

constexpr std::uint64_t kImageStream = 0x1A6E;
constexpr std::uint64_t kSamplingStream = 0x5A3D;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Cell {
    EncodingKind encoding;
    ImageSize size;
    Backend backend;
    std::uint64_t shots;
    std::uint64_t seed;
};

std::vector<Cell> enumerate_cells(const ExperimentConfig& config) {
    std::vector<Cell> cells;
    cells.reserve(config.cell_count());
    for (auto encoding : config.encodings) {
        for (auto size : config.sizes) {
            for (auto backend : config.backends) {
                for (auto shots : config.shots_list) {
                    for (auto seed : config.seeds) {
                        cells.push_back({encoding, size, backend, shots, seed});
                    }
                }
            }
        }
    }
    return cells;
}

}  // namespace

GrayImage generate_image(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    Rng rng(derive_seed(seed, kImageStream));
    std::vector<int> pixels(rows * cols);
    for (auto& p : pixels) {
        p = static_cast<int>(rng() >> 56);
    }
    return GrayImage(rows, cols, std::move(pixels));
}

std::uint64_t sampling_seed(std::uint64_t seed) noexcept { return derive_seed(seed, kSamplingStream); }

std::string ExperimentRecord::status() const { return skip_reason ? "skipped:" + *skip_reason : "ok"; }

std::optional<std::string> skip_reason(EncodingKind kind, ImageSize size, std::size_t max_qubits) {
    if (kind == EncodingKind::FRQI) {
        if (size.rows != size.cols) {
            return "non-square image";
        }
        if (!std::has_single_bit(size.rows)) {
            return "non-power-of-two side";
        }
    }
    const std::size_t width = encoding_width(kind, size.rows, size.cols);
    if (width > max_qubits) {
        return "width " + std::to_string(width) + " exceeds simulation cap " + std::to_string(max_qubits);
    }
    return std::nullopt;
}

ExperimentRecord run_cell(EncodingKind kind, ImageSize size, Backend backend, std::uint64_t shots,
                          std::uint64_t seed, const ExperimentConfig& config) {
    ExperimentRecord rec;
    rec.encoding = kind;
    rec.rows = size.rows;
    rec.cols = size.cols;
    rec.backend = backend;
    rec.shots = shots;
    rec.seed = seed;
    if (auto reason = skip_reason(kind, size, config.max_qubits)) {
        rec.skip_reason = std::move(reason);
        return rec;
    }

    const SimulatorOptions options{config.max_qubits};
    const GrayImage image = generate_image(size.rows, size.cols, seed);

    auto start = Clock::now();
    const Circuit circuit = encode(image, kind, options);
    rec.encode_time_s = seconds_since(start);

    rec.summary = circuit_summary(circuit);
    rec.supermarq = supermarq(circuit);

    const Circuit executed = config.invert ? apply_inversion(circuit, kind) : circuit;
    const GrayImage expected = config.invert ? image.inverted() : image;
    const std::uint64_t sample_seed = sampling_seed(seed);

    ReconstructedImage decoded;
    switch (backend) {
        case Backend::StateVec: {
            start = Clock::now();
            const StateVector state = run_statevector(executed, options);
            rec.simulate_time_s = seconds_since(start);
            start = Clock::now();
            decoded = decode_from_statevector(state, kind, size.rows, size.cols);
            rec.decode_time_s = seconds_since(start);
            // Exact probabilities compared with themselves.
            rec.hellinger_fidelity = 1.0;
            break;
        }
        case Backend::PureShots: {
            start = Clock::now();
            const StateVector state = run_statevector(executed, options);
            const Counts counts = sample_counts(state, shots, sample_seed);
            rec.simulate_time_s = seconds_since(start);
            start = Clock::now();
            decoded = decode(counts, kind, size.rows, size.cols);
            rec.decode_time_s = seconds_since(start);
            rec.hellinger_fidelity = hellinger_fidelity(counts, state);
            break;
        }
        case Backend::NoisyShots: {
            start = Clock::now();
            const Counts counts = run_noisy(executed, config.noise, shots, sample_seed, options);
            rec.simulate_time_s = seconds_since(start);
            start = Clock::now();
            decoded = decode(counts, kind, size.rows, size.cols);
            rec.decode_time_s = seconds_since(start);
            rec.hellinger_fidelity = hellinger_fidelity(counts, run_statevector(executed, options));
            break;
        }
    }

    const auto report = correctness(expected, decoded);
    rec.precision_pct = report.precision_pct;
    rec.mean_error = report.mean_error;
    return rec;
}

std::size_t effective_threads(const ExperimentConfig& config) {
    std::size_t threads = config.threads != 0 ? config.threads : std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("QEB_THREADS"); env != nullptr) {
        char* end = nullptr;
        const unsigned long cap = std::strtoul(env, &end, 10);
        if (end != env && cap > 0) {
            threads = std::min<std::size_t>(threads, cap);
        }
    }
    return std::max<std::size_t>(threads, 1);
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config, const RecordSink& sink) {
    config.validate();
    const auto cells = enumerate_cells(config);
    std::vector<ExperimentRecord> records;
    records.reserve(cells.size());

    auto run = [&](const Cell& c) { return run_cell(c.encoding, c.size, c.backend, c.shots, c.seed, config); };

    const std::size_t threads = std::min(effective_threads(config), cells.size());
    if (threads <= 1) {
        for (const auto& c : cells) {
            records.push_back(run(c));
            if (sink) {
                sink(records.back());
            }
        }
        return records;
    }

    std::vector<std::optional<ExperimentRecord>> done(cells.size());
    std::exception_ptr failure;
    std::mutex mutex;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> abort{false};

    {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < cells.size() && !abort; i = next++) {
                    try {
                        auto rec = run(cells[i]);
                        std::lock_guard lock(mutex);
                        done[i] = std::move(rec);
                    } catch (...) {
                        std::lock_guard lock(mutex);
                        if (!failure) {
                            failure = std::current_exception();
                        }
                        abort = true;
                    }
                    ready.notify_all();
                }
            });
        }

        for (std::size_t i = 0; i < cells.size(); ++i) {
            std::unique_lock lock(mutex);
            ready.wait(lock, [&] { return done[i].has_value() || failure; });
            if (failure) {
                break;
            }
            records.push_back(std::move(*done[i]));
            lock.unlock();
            if (sink) {
                sink(records.back());
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return records;
}

}  // namespace qeb
