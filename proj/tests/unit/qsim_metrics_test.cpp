#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "ionqft/qsim/metrics.hpp"

namespace ionqft::qsim {
namespace {

using Cx = std::complex<double>;

ProbabilityDistribution random_distribution(std::mt19937_64& rng, std::size_t dim)
{
    std::exponential_distribution<double> e;
    std::vector<double> p(dim);
    double sum = 0;
    for (auto& x : p) {
        x = e(rng);
        sum += x;
    }
    for (auto& x : p) {
        x /= sum;
    }
    return ProbabilityDistribution(std::move(p));
}

TEST(MeasurementProbabilities, FromState)
{
    ComplexVector v(4);
    v << Cx(0.5, 0), Cx(0, 0.5), Cx(-0.5, 0), Cx(0, -0.5);
    const auto p = measurement_probabilities(QuantumState(2, v));
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_DOUBLE_EQ(p[i], 0.25);
    }
}

TEST(MeasurementProbabilities, ClampsRoundOff)
{
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 1.0 + 5e-11;
    m(1, 1) = -5e-11;
    const auto p = measurement_probabilities(DensityMatrix(1, m));
    EXPECT_EQ(p[1], 0.0);
    EXPECT_DOUBLE_EQ(p[0], 1.0);
}

TEST(MeasurementProbabilities, RejectsCorruptedState)
{
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 1.1;
    m(1, 1) = -0.1;
    EXPECT_THROW(measurement_probabilities(DensityMatrix(1, m)), std::domain_error);
}

TEST(Sso, Examples)
{
    const auto point = ProbabilityDistribution::point_mass(8, 0);
    const auto uniform = ProbabilityDistribution::uniform(8);
    EXPECT_DOUBLE_EQ(sso(point, point), 1.0);
    EXPECT_DOUBLE_EQ(sso(point, uniform), 0.125);
    EXPECT_DOUBLE_EQ(sso(point, ProbabilityDistribution::point_mass(8, 3)), 0.0);
    EXPECT_THROW(sso(point, ProbabilityDistribution::uniform(4)), std::invalid_argument);
}

TEST(Distinguishability, Examples)
{
    const auto point = ProbabilityDistribution::point_mass(8, 0);
    const auto uniform = ProbabilityDistribution::uniform(8);
    EXPECT_DOUBLE_EQ(distinguishability(point, point), 1.0);
    EXPECT_DOUBLE_EQ(distinguishability(point, uniform), 0.125);
    EXPECT_DOUBLE_EQ(distinguishability(point, ProbabilityDistribution::point_mass(8, 3)), 0.0);
    EXPECT_THROW(distinguishability(point, ProbabilityDistribution::uniform(4)), std::invalid_argument);
}

TEST(Metrics, SymmetricAndBounded)
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_distribution(rng, 8);
        const auto q = random_distribution(rng, 8);
        const double s = sso(p, q);
        const double d = distinguishability(p, q);
        EXPECT_DOUBLE_EQ(s, sso(q, p));
        EXPECT_DOUBLE_EQ(d, distinguishability(q, p));
        EXPECT_GE(s, 0.0);
        EXPECT_LE(s, 1.0);
        EXPECT_GE(d, 0.0);
        EXPECT_LE(d, 1.0);
        EXPECT_NEAR(sso(p, p), 1.0, 1e-12);
        // Fuchs-van de Graaf: 1 - sqrt(1 - F) <= 1 - TV <= ... only the upper side
        // is needed here: TV >= 1 - sqrt(F).
        EXPECT_LE(d, std::sqrt(s) + 1e-12);
    }
}

TEST(TopK, OrderAndTies)
{
    const ProbabilityDistribution p({0.1, 0.3, 0.1, 0.3, 0.2});
    EXPECT_EQ(top_k_indices(p, 2), (std::vector<std::size_t>{1, 3}));
    EXPECT_EQ(top_k_indices(p, 3), (std::vector<std::size_t>{1, 3, 4}));
    EXPECT_EQ(top_k_indices(p, 10).size(), 5u);
}

}  // namespace
}  // namespace ionqft::qsim
