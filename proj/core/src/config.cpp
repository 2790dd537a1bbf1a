#include "qeb/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <string>

namespace qeb {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string unquote(std::string_view s) {
    s = trim(s);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
        s = s.substr(1, s.size() - 2);
    }
    return std::string(s);
}

/// Removes a '#' comment that is not inside double quotes.
std::string_view strip_comment(std::string_view line) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') {
            quoted = !quoted;
        } else if (line[i] == '#' && !quoted) {
            return line.substr(0, i);
        }
    }
    return line;
}

class LineError {
public:
    LineError(std::size_t line, std::string key) : line_(line), key_(std::move(key)) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw ConfigError("config line " + std::to_string(line_) + " (" + key_ + "): " + what);
    }

private:
    std::size_t line_;
    std::string key_;
};

std::vector<std::string> split_list(std::string_view value) {
    value = trim(value);
    if (!value.empty() && value.front() == '[') {
        if (value.back() != ']') {
            return {"\x01"};  // marks an unterminated list for the caller
        }
        value = value.substr(1, value.size() - 2);
    }
    std::vector<std::string> items;
    if (trim(value).empty()) {
        return items;
    }
    while (true) {
        const auto comma = value.find(',');
        items.push_back(unquote(value.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        value.remove_prefix(comma + 1);
    }
    return items;
}

template <typename T>
T parse_number(const std::string& text, const LineError& err) {
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        err.fail("'" + text + "' is not a valid number");
    }
    return value;
}

bool parse_bool(const std::string& text, const LineError& err) {
    const auto v = lower(text);
    if (v == "true" || v == "yes" || v == "1" || v == "on") {
        return true;
    }
    if (v == "false" || v == "no" || v == "0" || v == "off") {
        return false;
    }
    err.fail("'" + text + "' is not a boolean");
}

template <typename T, typename Parse>
std::vector<T> parse_list(std::string_view value, const LineError& err, Parse parse) {
    auto items = split_list(value);
    if (items.size() == 1 && items.front() == "\x01") {
        err.fail("unterminated list");
    }
    if (items.empty()) {
        err.fail("list must not be empty");
    }
    std::vector<T> out;
    out.reserve(items.size());
    for (const auto& item : items) {
        out.push_back(parse(item));
    }
    return out;
}

}  // namespace

std::string_view to_string(Backend backend) noexcept {
    switch (backend) {
        case Backend::StateVec: return "statevec";
        case Backend::PureShots: return "pure";
        case Backend::NoisyShots: return "noisy";
    }
    return "?";
}

std::optional<Backend> parse_backend(std::string_view name) {
    const auto v = lower(name);
    if (v == "statevec" || v == "statevector") {
        return Backend::StateVec;
    }
    if (v == "pure" || v == "pure_shots" || v == "shots") {
        return Backend::PureShots;
    }
    if (v == "noisy" || v == "noisy_shots") {
        return Backend::NoisyShots;
    }
    return std::nullopt;
}

std::string_view to_string(ReportFormat format) noexcept {
    return format == ReportFormat::Csv ? "csv" : "json";
}

std::optional<ReportFormat> parse_report_format(std::string_view name) {
    const auto v = lower(name);
    if (v == "csv") {
        return ReportFormat::Csv;
    }
    if (v == "json") {
        return ReportFormat::Json;
    }
    return std::nullopt;
}

std::optional<ImageSize> parse_size(std::string_view text) {
    const auto v = lower(trim(text));
    auto parse_dim = [](std::string_view s) -> std::optional<std::size_t> {
        std::size_t out = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty() || out == 0) {
            return std::nullopt;
        }
        return out;
    };
    const auto x = v.find('x');
    if (x == std::string::npos) {
        const auto n = parse_dim(v);
        return n ? std::optional<ImageSize>({*n, *n}) : std::nullopt;
    }
    const auto rows = parse_dim(std::string_view(v).substr(0, x));
    const auto cols = parse_dim(std::string_view(v).substr(x + 1));
    if (!rows || !cols) {
        return std::nullopt;
    }
    return ImageSize{*rows, *cols};
}

void ExperimentConfig::validate() const {
    if (encodings.empty()) {
        throw ConfigError("no encodings selected");
    }
    if (sizes.empty()) {
        throw ConfigError("no image sizes selected");
    }
    if (backends.empty()) {
        throw ConfigError("no backends selected");
    }
    if (shots_list.empty()) {
        throw ConfigError("no shot counts selected");
    }
    if (seeds.empty()) {
        throw ConfigError("no seeds selected");
    }
    if (std::find(shots_list.begin(), shots_list.end(), 0U) != shots_list.end()) {
        throw ConfigError("shot counts must be at least 1");
    }
    for (const auto& s : sizes) {
        if (s.rows == 0 || s.cols == 0) {
            throw ConfigError("image dimensions must be positive");
        }
    }
    try {
        noise.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

std::size_t ExperimentConfig::cell_count() const noexcept {
    return encodings.size() * sizes.size() * backends.size() * shots_list.size() * seeds.size();
}

ExperimentConfig default_experiment_config() {
    ExperimentConfig c;
    c.encodings = {EncodingKind::QubitLattice, EncodingKind::PhaseEncoding, EncodingKind::FRQI};
    c.sizes = {{2, 2}, {3, 3}, {4, 4}, {5, 5}, {8, 8}, {16, 16}};
    c.backends = {Backend::StateVec};
    c.shots_list = {10000};
    c.seeds = {1};
    c.output = "results.csv";
    return c;
}

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig c = default_experiment_config();
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(strip_comment(raw));
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const auto key = lower(trim(line.substr(0, eq)));
        const auto value = trim(line.substr(eq + 1));
        const LineError err(line_no, key);
        if (value.empty()) {
            err.fail("missing value");
        }

        if (key == "encodings") {
            c.encodings = parse_list<EncodingKind>(value, err, [&](const std::string& s) {
                const auto k = parse_encoding(s);
                if (!k) {
                    err.fail("unknown encoding '" + s + "'");
                }
                return *k;
            });
        } else if (key == "sizes") {
            c.sizes = parse_list<ImageSize>(value, err, [&](const std::string& s) {
                const auto sz = parse_size(s);
                if (!sz) {
                    err.fail("bad size '" + s + "'");
                }
                return *sz;
            });
        } else if (key == "backends") {
            c.backends = parse_list<Backend>(value, err, [&](const std::string& s) {
                const auto b = parse_backend(s);
                if (!b) {
                    err.fail("unknown backend '" + s + "'");
                }
                return *b;
            });
        } else if (key == "shots") {
            c.shots_list = parse_list<std::uint64_t>(
                value, err, [&](const std::string& s) { return parse_number<std::uint64_t>(s, err); });
        } else if (key == "seeds") {
            c.seeds = parse_list<std::uint64_t>(
                value, err, [&](const std::string& s) { return parse_number<std::uint64_t>(s, err); });
        } else if (key == "p1") {
            c.noise.p1 = parse_number<double>(unquote(value), err);
        } else if (key == "p2") {
            c.noise.p2 = parse_number<double>(unquote(value), err);
        } else if (key == "p_readout") {
            c.noise.p_readout = parse_number<double>(unquote(value), err);
        } else if (key == "invert") {
            c.invert = parse_bool(unquote(value), err);
        } else if (key == "max_qubits") {
            c.max_qubits = parse_number<std::size_t>(unquote(value), err);
        } else if (key == "output") {
            c.output = unquote(value);
        } else if (key == "format") {
            const auto f = parse_report_format(unquote(value));
            if (!f) {
                err.fail("format must be csv or json");
            }
            c.format = *f;
        } else if (key == "threads") {
            c.threads = parse_number<std::size_t>(unquote(value), err);
        } else if (key == "gnuplot") {
            c.gnuplot = parse_bool(unquote(value), err);
        } else {
            err.fail("unknown key");
        }
    }
    c.validate();
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file " + path.string());
    }
    return parse_config(in);
}

}  // namespace qeb
