#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qeb/errors.hpp"
#include "qeb/experiment.hpp"
#include "qeb/noise.hpp"
#include "qeb/pipeline.hpp"
#include "qeb/statevector.hpp"

using qeb::Circuit;
using qeb::GateOp;
using qeb::NoiseConfig;

namespace {

double frequency(const qeb::Counts& c, qeb::Counts::Outcome o) {
    return static_cast<double>(c.at(o)) / static_cast<double>(c.total());
}

// |x - expected| within k standard deviations of a binomial proportion.
void expect_proportion(double got, double p, double shots, double k = 4.0) {
    const double sigma = std::sqrt(p * (1 - p) / shots);
    EXPECT_LT(std::abs(got - p), k * sigma + 1e-12) << "expected " << p;
}

}  // namespace

TEST(NoiseConfig, Validation) {
    EXPECT_NO_THROW(NoiseConfig{}.validate());
    EXPECT_NO_THROW((NoiseConfig{1.0, 0.0, 1.0}.validate()));
    EXPECT_THROW((NoiseConfig{-0.1, 0, 0}.validate()), std::invalid_argument);
    EXPECT_THROW((NoiseConfig{0, 1.5, 0}.validate()), std::invalid_argument);
    EXPECT_THROW((NoiseConfig{0, 0, std::nan("")}.validate()), std::invalid_argument);
    EXPECT_TRUE(NoiseConfig{}.noiseless());
}

TEST(RunNoisy, ZeroNoiseMatchesSampleCounts) {
    Circuit c(3);
    c.append(GateOp::h(0)).append(GateOp::cx(0, 1)).append(GateOp::ry(1.1, 2)).append(GateOp::mcx({0, 2}, 1));
    const auto ideal = qeb::sample_counts(qeb::run_statevector(c), 20000, 77);
    EXPECT_EQ(qeb::run_noisy(c, NoiseConfig{}, 20000, 77), ideal);
}

TEST(RunNoisy, FullReadoutFlip) {
    const auto counts = qeb::run_noisy(Circuit(1), NoiseConfig{0, 0, 1.0}, 500, 3);
    EXPECT_EQ(counts.to_json(), nlohmann::json({{"1", 500}}));
}

TEST(RunNoisy, RejectsBadInput) {
    EXPECT_THROW((void)qeb::run_noisy(Circuit(1), NoiseConfig{}, 0, 1), std::invalid_argument);
    EXPECT_THROW((void)qeb::run_noisy(Circuit(1), NoiseConfig{2, 0, 0}, 10, 1), std::invalid_argument);
    EXPECT_THROW((void)qeb::run_noisy(Circuit(5), NoiseConfig{}, 10, 1, {4}), qeb::ResourceError);
}

TEST(RunNoisy, SeedDeterminism) {
    Circuit c(2);
    c.append(GateOp::h(0)).append(GateOp::cx(0, 1)).append(GateOp::ry(0.3, 1));
    const NoiseConfig noise{0.05, 0.05, 0.02};
    EXPECT_EQ(qeb::run_noisy(c, noise, 3000, 8), qeb::run_noisy(c, noise, 3000, 8));
    EXPECT_NE(qeb::run_noisy(c, noise, 3000, 8), qeb::run_noisy(c, noise, 3000, 9));
}

TEST(RunNoisy, SingleQubitDepolarizingRate) {
    // X and Y flip the outcome, Z does not: P(1) = (1 - 2p/3) s + (2p/3) (1 - s).
    const double theta = 0.9;
    const double s = std::pow(std::sin(theta / 2), 2);
    const double p = 0.3;
    Circuit c(2);
    c.append(GateOp::ry(theta, 0)).append(GateOp::ry(theta, 1));
    const double shots = 200000;
    const auto counts = qeb::run_noisy(c, NoiseConfig{p, 0, 0}, 200000, 10);
    const double want = (1 - 2 * p / 3) * s + (2 * p / 3) * (1 - s);
    expect_proportion(frequency(counts, 1) + frequency(counts, 3), want, shots);
    expect_proportion(frequency(counts, 2) + frequency(counts, 3), want, shots);
}

TEST(RunNoisy, TwoQubitDepolarizingRate) {
    // After a Bell preparation, odd parity needs exactly one bit-flipping
    // Pauli among the two independent ones: p2 * 2 * (2/3) * (1/3).
    Circuit c(2);
    c.append(GateOp::h(0)).append(GateOp::cx(0, 1));
    const double p2 = 0.3;
    const auto counts = qeb::run_noisy(c, NoiseConfig{0, p2, 0}, 200000, 11);
    expect_proportion(frequency(counts, 1) + frequency(counts, 2), p2 * 4.0 / 9.0, 200000);
}

TEST(RunNoisy, ReadoutRate) {
    Circuit c(2);
    c.append(GateOp::x(1));
    const double pr = 0.1;
    const auto counts = qeb::run_noisy(c, NoiseConfig{0, 0, pr}, 200000, 12);
    expect_proportion(frequency(counts, 0b10), (1 - pr) * (1 - pr), 200000);
    expect_proportion(frequency(counts, 0b01), pr * pr, 200000);
}

TEST(RunNoisy, FactorizedAndGeneralPathsAgree) {
    // The same product circuit is sampled factorized on its own and through
    // the trajectory path once a harmless multi-qubit gate joins it.
    Circuit product(3);
    Circuit coupled(4);
    for (qeb::Qubit q = 0; q < 3; ++q) {
        product.append(GateOp::ry(0.4 + q, q));
        coupled.append(GateOp::ry(0.4 + q, q));
    }
    coupled.append(GateOp::cx(3, 0));  // control stays |0>
    const NoiseConfig noise{0.2, 0.0, 0.05};
    const auto a = qeb::run_noisy(product, noise, 100000, 13);
    const auto b = qeb::run_noisy(coupled, noise, 100000, 14);
    for (qeb::Counts::Outcome o = 0; o < 8; ++o) {
        const double pa = frequency(a, o);
        const double pb = frequency(b, o) + frequency(b, o | 0b1000);  // readout also flips qubit 3
        EXPECT_LT(std::abs(pa - pb), 5 * std::sqrt(2 * 0.25 / 100000)) << "outcome " << o;
    }
}

TEST(RunNoisy, GateNoiseRaisesQubitLatticeError) {
    double noisy = 0.0;
    double clean = 0.0;
    const NoiseConfig noise{0.05, 0.0, 0.0};
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto image = qeb::generate_image(2, 2, seed);
        const auto circuit = qeb::encode(image, qeb::EncodingKind::QubitLattice);
        const auto state = qeb::run_statevector(circuit);
        const auto c_clean = qeb::sample_counts(state, 10000, seed);
        const auto c_noisy = qeb::run_noisy(circuit, noise, 10000, seed);
        for (const auto* c : {&c_clean, &c_noisy}) {
            const auto got = qeb::decode(*c, qeb::EncodingKind::QubitLattice, 2, 2);
            double err = 0.0;
            for (std::size_t i = 0; i < 4; ++i) {
                err += std::abs(got.values[i] - image.pixels()[i]) / std::max(1.0, double(image.pixels()[i]));
            }
            (c == &c_clean ? clean : noisy) += err / 4;
        }
    }
    EXPECT_GT(noisy / 20, clean / 20);
}
