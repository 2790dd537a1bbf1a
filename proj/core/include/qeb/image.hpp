#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace qeb {

/// Row-major 8-bit grayscale image.
class GrayImage {
public:
    /// Throws std::invalid_argument for zero dimensions, a size mismatch or a
    /// pixel outside [0, 255].
    GrayImage(std::size_t rows, std::size_t cols, std::vector<int> pixels);
    /// All-zero image.
    GrayImage(std::size_t rows, std::size_t cols);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::size_t size() const noexcept { return pixels_.size(); }
    [[nodiscard]] std::span<const int> pixels() const noexcept { return pixels_; }
    [[nodiscard]] int at(std::size_t r, std::size_t c) const { return pixels_.at(r * cols_ + c); }
    void set(std::size_t r, std::size_t c, int value);

    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    /// 255 - p for every pixel.
    [[nodiscard]] GrayImage inverted() const;

    friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<int> pixels_;
};

enum class ImageFormat { Pgm, Csv };

/// Picks the format from the file extension (.pgm or .csv).
[[nodiscard]] ImageFormat format_for_path(const std::filesystem::path& path);

/// Plain PGM ("P2"). Comments are allowed; maxval must be in [1, 255].
[[nodiscard]] GrayImage read_pgm(std::istream& in);
void write_pgm(std::ostream& out, const GrayImage& image);

/// One row per line, comma-separated integers.
[[nodiscard]] GrayImage read_csv(std::istream& in);
void write_csv(std::ostream& out, const GrayImage& image);

[[nodiscard]] GrayImage load_image(const std::filesystem::path& path);
void save_image(const std::filesystem::path& path, const GrayImage& image);

}  // namespace qeb
