#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ionqft/qsim/channels.hpp"
#include "ionqft/qsim/metrics.hpp"

namespace ionqft::qsim {
namespace {

using Cx = std::complex<double>;

DensityMatrix random_density(std::mt19937_64& rng, int n)
{
    std::normal_distribution<double> g;
    const auto dim = Eigen::Index{1} << n;
    ComplexMatrix a(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            a(r, c) = Cx(g(rng), g(rng));
        }
    }
    ComplexMatrix rho = a * a.adjoint();
    rho /= rho.trace();
    return DensityMatrix(n, 0.5 * (rho + rho.adjoint()));
}

double max_diff(const ComplexMatrix& a, const ComplexMatrix& b)
{
    return (a - b).cwiseAbs().maxCoeff();
}

TEST(Dephase, ZeroRateIsIdentity)
{
    std::mt19937_64 rng(1);
    const auto rho = random_density(rng, 3);
    EXPECT_EQ(dephase(rho, 0.0, 1.0).matrix(), rho.matrix());
    EXPECT_EQ(dephase(rho, 62.5, 0.0).matrix(), rho.matrix());
}

TEST(Dephase, LongTimeKillsCoherences)
{
    std::mt19937_64 rng(2);
    const auto rho = random_density(rng, 2);
    const auto out = dephase(rho, 62.5, 10.0);
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            if (r == c) {
                EXPECT_EQ(out(r, c), rho(r, c));
            } else {
                EXPECT_LT(std::abs(out(r, c)), 1e-200);
            }
        }
    }
}

TEST(Dephase, FactorOverFirstFreePeriod)
{
    const double factor = std::exp(-62.5 * 3.69e-3);
    EXPECT_NEAR(factor, 0.7940, 5e-5);
    const auto plus = DensityMatrix(1, ComplexMatrix::Constant(2, 2, 0.5));
    EXPECT_NEAR(dephase(plus, 62.5, 3.69e-3)(0, 1).real(), 0.5 * factor, 1e-15);
}

TEST(Dephase, Semigroup)
{
    std::mt19937_64 rng(3);
    const auto rho = random_density(rng, 3);
    const auto split = dephase(dephase(rho, 62.5, 1.2e-3), 62.5, 2.3e-3);
    EXPECT_LT(max_diff(split.matrix(), dephase(rho, 62.5, 3.5e-3).matrix()), 1e-15);
}

TEST(Dephase, RejectsNegativeParameters)
{
    const auto rho = DensityMatrix::maximally_mixed(1);
    EXPECT_THROW(dephase(rho, -1.0, 1.0), std::invalid_argument);
    EXPECT_THROW(dephase(rho, 1.0, -1.0), std::invalid_argument);
    EXPECT_THROW(dephase(rho, std::nan(""), 1.0), std::invalid_argument);
}

TEST(Depolarize, Endpoints)
{
    std::mt19937_64 rng(4);
    const auto rho = random_density(rng, 3);
    EXPECT_EQ(depolarize(rho, 0.0).matrix(), rho.matrix());
    EXPECT_LT(max_diff(depolarize(rho, 1.0).matrix(), DensityMatrix::maximally_mixed(3).matrix()), 1e-15);
}

TEST(Depolarize, QuarterStrengthOnThreeQubits)
{
    std::mt19937_64 rng(5);
    const auto rho = random_density(rng, 3);
    const auto p = measurement_probabilities(rho);
    const auto q = measurement_probabilities(depolarize(rho, 0.25));
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_NEAR(q[i], 0.03125 + 0.75 * p[i], 1e-14);
    }
}

TEST(Depolarize, Composition)
{
    std::mt19937_64 rng(6);
    const auto rho = random_density(rng, 2);
    const double a = 0.2;
    const double b = 0.3;
    const auto twice = depolarize(depolarize(rho, a), b);
    EXPECT_LT(max_diff(twice.matrix(), depolarize(rho, 1 - (1 - a) * (1 - b)).matrix()), 1e-15);
}

TEST(Depolarize, RejectsOutOfRange)
{
    const auto rho = DensityMatrix::maximally_mixed(1);
    EXPECT_THROW(depolarize(rho, -0.01), std::invalid_argument);
    EXPECT_THROW(depolarize(rho, 1.01), std::invalid_argument);
}

TEST(Channels, PreserveTraceHermiticityAndPositivity)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
        const auto rho = random_density(rng, 3);
        const auto out = depolarize(dephase(rho, 100 * u(rng), 1e-2 * u(rng)), u(rng));
        EXPECT_NEAR(out.trace().real(), 1.0, 1e-12);
        EXPECT_LT(max_diff(out.matrix(), out.matrix().adjoint()), 1e-15);
        EXPECT_GT(out.min_eigenvalue(), -1e-12);
    }
}

}  // namespace
}  // namespace ionqft::qsim
