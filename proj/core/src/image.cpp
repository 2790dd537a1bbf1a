#include "qeb/image.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qeb {

namespace {

void check_pixel(int value) {
    if (value < 0 || value > 255) {
        throw std::invalid_argument("pixel value " + std::to_string(value) + " outside [0, 255]");
    }
}

int parse_int(std::string_view token) {
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) {
        token.remove_prefix(1);
    }
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) {
        token.remove_suffix(1);
    }
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
        throw std::invalid_argument("expected an integer, got '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

GrayImage::GrayImage(std::size_t rows, std::size_t cols, std::vector<int> pixels)
    : rows_(rows), cols_(cols), pixels_(std::move(pixels)) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("image dimensions must be positive");
    }
    if (pixels_.size() != rows * cols) {
        throw std::invalid_argument("image has " + std::to_string(pixels_.size()) + " pixels, expected " +
                                    std::to_string(rows * cols));
    }
    std::for_each(pixels_.begin(), pixels_.end(), check_pixel);
}

GrayImage::GrayImage(std::size_t rows, std::size_t cols)
    : GrayImage(rows, cols, std::vector<int>(rows * cols, 0)) {}

void GrayImage::set(std::size_t r, std::size_t c, int value) {
    check_pixel(value);
    pixels_.at(r * cols_ + c) = value;
}

GrayImage GrayImage::inverted() const {
    std::vector<int> out(pixels_.size());
    std::transform(pixels_.begin(), pixels_.end(), out.begin(), [](int p) { return 255 - p; });
    return GrayImage(rows_, cols_, std::move(out));
}

ImageFormat format_for_path(const std::filesystem::path& path) {
    auto ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == ".pgm") {
        return ImageFormat::Pgm;
    }
    if (ext == ".csv") {
        return ImageFormat::Csv;
    }
    throw std::invalid_argument("unsupported image extension '" + ext + "' (use .pgm or .csv)");
}

GrayImage read_pgm(std::istream& in) {
    // Tokenize with '#' comments stripped to end of line.
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            tokens.push_back(tok);
        }
    }
    if (tokens.size() < 4 || tokens[0] != "P2") {
        throw std::invalid_argument("not a plain (P2) PGM file");
    }
    const int cols = parse_int(tokens[1]);
    const int rows = parse_int(tokens[2]);
    const int maxval = parse_int(tokens[3]);
    if (rows <= 0 || cols <= 0) {
        throw std::invalid_argument("PGM dimensions must be positive");
    }
    if (maxval < 1 || maxval > 255) {
        throw std::invalid_argument("PGM maxval must be in [1, 255]");
    }
    const auto count = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    if (tokens.size() != 4 + count) {
        throw std::invalid_argument("PGM has " + std::to_string(tokens.size() - 4) + " samples, expected " +
                                    std::to_string(count));
    }
    std::vector<int> pixels;
    pixels.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const int v = parse_int(tokens[4 + i]);
        if (v > maxval) {
            throw std::invalid_argument("PGM sample exceeds maxval");
        }
        pixels.push_back(v);
    }
    return GrayImage(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(pixels));
}

void write_pgm(std::ostream& out, const GrayImage& image) {
    out << "P2\n" << image.cols() << ' ' << image.rows() << "\n255\n";
    for (std::size_t r = 0; r < image.rows(); ++r) {
        for (std::size_t c = 0; c < image.cols(); ++c) {
            out << (c == 0 ? "" : " ") << image.at(r, c);
        }
        out << '\n';
    }
}

GrayImage read_csv(std::istream& in) {
    std::vector<int> pixels;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::size_t row_cols = 0;
        std::string_view rest(line);
        while (true) {
            const auto comma = rest.find(',');
            pixels.push_back(parse_int(rest.substr(0, comma)));
            ++row_cols;
            if (comma == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(comma + 1);
        }
        if (rows == 0) {
            cols = row_cols;
        } else if (row_cols != cols) {
            throw std::invalid_argument("CSV row " + std::to_string(rows + 1) + " has " +
                                        std::to_string(row_cols) + " values, expected " + std::to_string(cols));
        }
        ++rows;
    }
    if (rows == 0) {
        throw std::invalid_argument("CSV image is empty");
    }
    return GrayImage(rows, cols, std::move(pixels));
}

void write_csv(std::ostream& out, const GrayImage& image) {
    for (std::size_t r = 0; r < image.rows(); ++r) {
        for (std::size_t c = 0; c < image.cols(); ++c) {
            out << (c == 0 ? "" : ",") << image.at(r, c);
        }
        out << '\n';
    }
}

GrayImage load_image(const std::filesystem::path& path) {
    const auto format = format_for_path(path);
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return format == ImageFormat::Pgm ? read_pgm(in) : read_csv(in);
}

void save_image(const std::filesystem::path& path, const GrayImage& image) {
    const auto format = format_for_path(path);
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    if (format == ImageFormat::Pgm) {
        write_pgm(out, image);
    } else {
        write_csv(out, image);
    }
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

}  // namespace qeb
