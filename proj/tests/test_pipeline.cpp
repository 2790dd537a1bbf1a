#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "qeb/encoders.hpp"
#include "qeb/experiment.hpp"
#include "qeb/pipeline.hpp"
#include "qeb/statevector.hpp"
#include "random_circuits.hpp"

using qeb::Counts;
using qeb::EncodingKind;
using qeb::GrayImage;

namespace {

constexpr EncodingKind kAll[] = {EncodingKind::QubitLattice, EncodingKind::PhaseEncoding, EncodingKind::FRQI};

struct Size {
    std::size_t rows;
    std::size_t cols;
};

std::vector<Size> sizes_for(EncodingKind kind) {
    if (kind == EncodingKind::FRQI) {
        return {{1, 1}, {2, 2}, {4, 4}, {8, 8}, {16, 16}};
    }
    return {{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {2, 5}, {3, 1}};
}

qeb::ReconstructedImage exact_roundtrip(const GrayImage& img, EncodingKind kind, bool invert) {
    auto circuit = qeb::encode(img, kind);
    if (invert) {
        circuit = qeb::apply_inversion(circuit, kind);
    }
    return qeb::decode_from_statevector(qeb::run_statevector(circuit), kind, img.rows(), img.cols());
}

Counts single_outcome(std::size_t bits, Counts::Outcome o, std::uint64_t n) {
    Counts c(bits);
    c.add(o, n);
    return c;
}

}  // namespace

TEST(Encoding, Names) {
    for (auto kind : kAll) {
        EXPECT_EQ(qeb::parse_encoding(qeb::to_string(kind)), kind);
    }
    EXPECT_EQ(qeb::parse_encoding("Qubit_Lattice"), EncodingKind::QubitLattice);
    EXPECT_EQ(qeb::parse_encoding("phase_encoding"), EncodingKind::PhaseEncoding);
    EXPECT_FALSE(qeb::parse_encoding("neqr").has_value());
}

TEST(Encoding, WidthFormula) {
    EXPECT_EQ(qeb::encoding_width(EncodingKind::QubitLattice, 3, 5), 15U);
    EXPECT_EQ(qeb::encoding_width(EncodingKind::FRQI, 16, 16), 9U);
    EXPECT_EQ(qeb::encoding_width(EncodingKind::FRQI, 1, 1), 1U);
}

TEST(Inversion, GatesAppended) {
    const GrayImage img(2, 2, {1, 2, 3, 4});
    const auto ql = qeb::encode(img, EncodingKind::QubitLattice);
    const auto inv = qeb::apply_inversion(ql, EncodingKind::QubitLattice);
    EXPECT_EQ(inv.size(), ql.size() + 4);
    const auto fr = qeb::encode(img, EncodingKind::FRQI);
    const auto frinv = qeb::apply_inversion(fr, EncodingKind::FRQI);
    ASSERT_EQ(frinv.size(), fr.size() + 1);
    EXPECT_EQ(frinv.ops().back(), qeb::GateOp::x(0));
}

TEST(Inversion, LatticeEndpointsAndInvolution) {
    const GrayImage img(1, 3, {0, 77, 255});
    const auto once = exact_roundtrip(img, EncodingKind::QubitLattice, true);
    EXPECT_EQ(once.values[0], 255);
    EXPECT_EQ(once.values[2], 0);
    auto twice = qeb::apply_inversion(
        qeb::apply_inversion(qeb::encode(img, EncodingKind::QubitLattice), EncodingKind::QubitLattice),
        EncodingKind::QubitLattice);
    const auto back = qeb::decode_from_statevector(qeb::run_statevector(twice), EncodingKind::QubitLattice, 1, 3);
    EXPECT_EQ(back.values, (std::vector<int>{0, 77, 255}));
}

TEST(Inversion, FrqiUniform64Gives191) {
    const GrayImage img(4, 4, std::vector<int>(16, 64));
    const auto got = exact_roundtrip(img, EncodingKind::FRQI, true);
    EXPECT_EQ(got.values, std::vector<int>(16, 191));
}

TEST(DecodeLattice, Examples) {
    EXPECT_EQ(qeb::decode_qubit_lattice(single_outcome(4, 0b0000, 100), 2, 2).values, std::vector<int>(4, 0));
    EXPECT_EQ(qeb::decode_qubit_lattice(single_outcome(4, 0b1111, 100), 2, 2).values, std::vector<int>(4, 255));

    Counts half(1);
    half.add(0, 50);
    half.add(1, 50);
    const auto r = qeb::decode_qubit_lattice(half, 1, 1);
    EXPECT_NEAR(r.raw_angles[0], std::numbers::pi / 2, 1e-12);
    EXPECT_EQ(r.values[0], 128);
}

TEST(DecodeLattice, MarginalsPerQubit) {
    Counts c(2);
    c.add(std::string_view("01"), 3);  // qubit 0 set
    c.add(std::string_view("11"), 1);
    // qubit 0: P0 = 0, qubit 1: P0 = 3/4
    const auto r = qeb::decode_qubit_lattice(c, 1, 2);
    EXPECT_EQ(r.values[0], 255);
    EXPECT_NEAR(r.raw_angles[1], 2 * std::acos(std::sqrt(0.75)), 1e-12);
    EXPECT_EQ(r.values[1], 85);
}

TEST(DecodePhase, Examples) {
    EXPECT_EQ(qeb::decode_phase(single_outcome(3, 0, 10), 1, 3).values, std::vector<int>(3, 0));
    EXPECT_EQ(qeb::decode_phase(single_outcome(3, 7, 10), 1, 3).values, std::vector<int>(3, 255));
    // P0 = cos^2(pi/8) means theta = pi/4, pixel round(255 / 4) = 64
    const double c = std::cos(std::numbers::pi / 8);
    const double s = std::sin(std::numbers::pi / 8);
    const qeb::StateVector state(std::vector<qeb::Complex>{c, s});
    const auto r = qeb::decode_from_statevector(state, EncodingKind::PhaseEncoding, 1, 1);
    EXPECT_NEAR(r.raw_angles[0], std::numbers::pi / 4, 1e-12);
    EXPECT_EQ(r.values[0], 64);
}

TEST(DecodeFrqi, Examples) {
    // colour bit 0 only at every position
    Counts zero(3);
    Counts full(3);
    for (Counts::Outcome j = 0; j < 4; ++j) {
        zero.add(qeb::frqi_index(j, 0), 25);
        full.add(qeb::frqi_index(j, 1), 25);
    }
    EXPECT_EQ(qeb::decode_frqi(zero, 2, 2).values, std::vector<int>(4, 0));
    EXPECT_EQ(qeb::decode_frqi(full, 2, 2).values, std::vector<int>(4, 255));
    EXPECT_EQ(qeb::decode_frqi(full, 2, 2).unobserved_count(), 0U);
}

TEST(DecodeFrqi, UnobservedPositionsAreFlagged) {
    Counts c(3);
    c.add(qeb::frqi_index(2, 1), 10);
    const auto r = qeb::decode_frqi(c, 2, 2);
    EXPECT_EQ(r.values, (std::vector<int>{0, 0, 255, 0}));
    EXPECT_EQ(r.unobserved, (std::vector<bool>{true, true, false, true}));
    EXPECT_EQ(r.unobserved_count(), 3U);
}

TEST(DecodeFrqi, SyntheticExactCountsRoundTrip) {
    // Exact Born probabilities scaled to integer counts keep the ratio
    // P(j,0) / (P(j,0) + P(j,1)) exact enough to recover every pixel.
    std::mt19937_64 gen(41);
    for (int trial = 0; trial < 10; ++trial) {
        const auto img = testgen::random_image(gen, 4, 4);
        const auto p = qeb::probabilities(qeb::frqi_ideal_state(img));
        Counts synthetic(5);
        for (std::size_t i = 0; i < p.size(); ++i) {
            synthetic.add(i, static_cast<std::uint64_t>(std::llround(p[i] * 1e12)));
        }
        const auto r = qeb::decode_frqi(synthetic, 4, 4);
        EXPECT_EQ(r.to_image(), img);
    }
}

TEST(Decode, RejectsBadInput) {
    EXPECT_THROW((void)qeb::decode_qubit_lattice(Counts(4), 2, 2), std::invalid_argument);
    EXPECT_THROW((void)qeb::decode_qubit_lattice(single_outcome(3, 0, 1), 2, 2), std::invalid_argument);
    EXPECT_THROW((void)qeb::decode_frqi(single_outcome(4, 0, 1), 2, 2), std::invalid_argument);
    EXPECT_THROW((void)qeb::decode_frqi(single_outcome(3, 0, 1), 2, 3), std::invalid_argument);
    EXPECT_THROW((void)qeb::decode_from_statevector(qeb::StateVector(3), EncodingKind::QubitLattice, 2, 2),
                 std::invalid_argument);
    EXPECT_THROW((void)qeb::decode_from_statevector(qeb::StateVector(4), EncodingKind::FRQI, 2, 2),
                 std::invalid_argument);
}

TEST(Decode, OutputAlwaysInRange) {
    std::mt19937_64 gen(42);
    std::uniform_int_distribution<std::uint64_t> n(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
        Counts c(5);
        for (Counts::Outcome o = 0; o < 32; ++o) {
            c.add(o, n(gen));
        }
        if (c.empty()) {
            continue;
        }
        for (auto kind : kAll) {
            const std::size_t rows = kind == EncodingKind::FRQI ? 4 : 1;
            const std::size_t cols = kind == EncodingKind::FRQI ? 4 : 5;
            for (int v : qeb::decode(c, kind, rows, cols).values) {
                EXPECT_GE(v, 0);
                EXPECT_LE(v, 255);
            }
        }
    }
}

TEST(QuantizePixel, RoundHalfUpAndClamp) {
    EXPECT_EQ(qeb::quantize_pixel(0.5), 128);
    EXPECT_EQ(qeb::quantize_pixel(0.0), 0);
    EXPECT_EQ(qeb::quantize_pixel(1.0), 255);
    EXPECT_EQ(qeb::quantize_pixel(-0.3), 0);
    EXPECT_EQ(qeb::quantize_pixel(1.7), 255);
    EXPECT_EQ(qeb::quantize_pixel(10.4 / 255), 10);
}

TEST(RoundTrip, ExactForEveryEncodingAndSize) {
    for (auto kind : kAll) {
        for (auto [rows, cols] : sizes_for(kind)) {
            const auto img = qeb::generate_image(rows, cols, rows * 100 + cols);
            const auto got = exact_roundtrip(img, kind, false);
            EXPECT_EQ(got.to_image(), img) << qeb::to_string(kind) << ' ' << rows << 'x' << cols;
        }
    }
}

TEST(RoundTrip, InversionWithinOne) {
    for (auto kind : kAll) {
        for (auto [rows, cols] : sizes_for(kind)) {
            const auto img = qeb::generate_image(rows, cols, rows * 100 + cols + 1);
            const auto got = exact_roundtrip(img, kind, true);
            for (std::size_t i = 0; i < img.size(); ++i) {
                EXPECT_LE(std::abs(got.values[i] - (255 - img.pixels()[i])), 1)
                    << qeb::to_string(kind) << ' ' << rows << 'x' << cols << " pixel " << i;
            }
        }
    }
}

TEST(RoundTrip, AllPixelValuesSurvive) {
    // Every intensity through a one-pixel circuit of each encoding.
    for (auto kind : kAll) {
        for (int v = 0; v <= 255; ++v) {
            const GrayImage img(1, 1, {v});
            ASSERT_EQ(exact_roundtrip(img, kind, false).values[0], v) << qeb::to_string(kind);
            ASSERT_LE(std::abs(exact_roundtrip(img, kind, true).values[0] - (255 - v)), 1);
        }
    }
}

TEST(RoundTrip, Frqi16x16IsFast) {
    const auto img = qeb::generate_image(16, 16, 9);
    const auto start = std::chrono::steady_clock::now();
    const auto got = exact_roundtrip(img, EncodingKind::FRQI, false);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_EQ(got.to_image(), img);
    EXPECT_LT(seconds, 1.0);
}

TEST(RoundTrip, ShotsImproveAccuracy) {
    const auto img = qeb::generate_image(2, 2, 3);
    double err_low = 0.0;
    double err_high = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto state = qeb::run_statevector(qeb::encode(img, EncodingKind::QubitLattice));
        for (auto [shots, acc] : {std::pair{std::uint64_t{100}, &err_low}, std::pair{std::uint64_t{100000}, &err_high}}) {
            const auto got = qeb::decode(qeb::sample_counts(state, shots, seed), EncodingKind::QubitLattice, 2, 2);
            for (std::size_t i = 0; i < 4; ++i) {
                *acc += std::abs(got.values[i] - img.pixels()[i]);
            }
        }
    }
    EXPECT_LT(err_high, err_low);
}
