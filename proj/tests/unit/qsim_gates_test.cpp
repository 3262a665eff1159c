#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "ionqft/qsim/gates.hpp"
#include "ionqft/qsim/metrics.hpp"
#include "oracles.hpp"

namespace ionqft::qsim {
namespace {

using std::numbers::pi;
using testing::Cx;

double max_diff(const ComplexMatrix& a, const ComplexMatrix& b)
{
    return (a - b).cwiseAbs().maxCoeff();
}

TEST(RotationMatrix, ZeroAngleIsIdentity)
{
    for (double phi : {0.0, 0.3, -2.0, pi}) {
        EXPECT_LT(max_diff(rotation_matrix(0.0, phi), identity2()), 1e-15);
    }
}

TEST(RotationMatrix, PiAboutXIsMinusISigmaX)
{
    EXPECT_LT(max_diff(rotation_matrix(pi, 0.0), Cx(0, -1) * pauli_x()), 1e-15);
}

TEST(RotationMatrix, HalfPiAboutMinusY)
{
    // cos(pi/4) I - i sin(pi/4) (-sigma_y) = (I + i sigma_y) / sqrt 2, expanded by hand.
    ComplexMatrix expected(2, 2);
    expected << 1.0, 1.0, -1.0, 1.0;
    expected /= std::sqrt(2.0);
    EXPECT_LT(max_diff(rotation_matrix(pi / 2.0, -pi / 2.0), expected), 1e-15);
    EXPECT_LT(max_diff(expected, (identity2() + Cx(0, 1) * pauli_y()) / std::sqrt(2.0)), 1e-15);
}

TEST(RotationMatrix, MatchesEigendecompositionOfGenerator)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(-4 * pi, 4 * pi);
    for (int i = 0; i < 200; ++i) {
        const double theta = angle(rng);
        const double phi = angle(rng);
        const ComplexMatrix h = 0.5 * theta * (std::cos(phi) * testing::sigma_x() + std::sin(phi) * testing::sigma_y());
        EXPECT_LT(max_diff(rotation_matrix(theta, phi), testing::expm_minus_i(h)), 1e-12);
    }
}

TEST(PhaseMatrix, Examples)
{
    EXPECT_LT(max_diff(phase_matrix(0.0), identity2()), 1e-15);
    ComplexMatrix expected(2, 2);
    expected << Cx(0, -1), 0, 0, Cx(0, 1);
    EXPECT_LT(max_diff(phase_matrix(pi / 2.0), expected), 1e-15);
}

TEST(PhaseMatrix, ConjugatingRotationShiftsPhase)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(-pi, pi);
    for (int i = 0; i < 100; ++i) {
        const double theta = 2 * angle(rng);
        const double phi = angle(rng);
        const ComplexMatrix lhs = phase_matrix(phi / 2.0) * rotation_matrix(theta, 0.0) * phase_matrix(-phi / 2.0);
        EXPECT_LT(max_diff(lhs, rotation_matrix(theta, phi)), 1e-12);
    }
}

TEST(NoisyRotation, NoiseFreeLimitIsRotation)
{
    const double omega = 2 * pi * 50e3;
    for (double theta : {0.0, 0.3, pi / 2, pi, 2.2}) {
        for (double phi : {0.0, 1.1, -pi / 2, 27 * pi / 16}) {
            EXPECT_LT(max_diff(noisy_rotation_matrix(theta, phi, 0.0, 0.0, omega), rotation_matrix(theta, phi)),
                      1e-15);
        }
    }
}

TEST(NoisyRotation, PureOverRotation)
{
    const double omega = 2 * pi * 50e3;
    EXPECT_LT(max_diff(noisy_rotation_matrix(pi, 0.0, 0.3, 0.0, omega), rotation_matrix(1.3 * pi, 0.0)), 1e-15);
}

TEST(NoisyRotation, DetuningMatchesEigendecompositionAndLowersFidelity)
{
    const double omega = 2 * pi * 50e3;
    const double delta = 0.05 * omega;
    const ComplexMatrix u = noisy_rotation_matrix(pi, 0.0, 0.0, delta, omega);
    const ComplexMatrix h = 0.5 * pi * testing::sigma_x() + (delta * pi / (2 * omega)) * testing::sigma_z();
    EXPECT_LT(max_diff(u, testing::expm_minus_i(h)), 1e-12);

    const double overlap = std::abs((u.adjoint() * rotation_matrix(pi, 0.0)).trace()) / 2.0;
    EXPECT_LT(overlap, 1.0 - 1e-6);
    EXPECT_GT(overlap, 0.99);
}

TEST(NoisyRotation, RandomParametersMatchOracle)
{
    const double omega = 2 * pi * 50e3;
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> angle(0, 2 * pi), eps(-0.3, 0.3), det(-0.05, 0.05);
    for (int i = 0; i < 200; ++i) {
        const double theta = angle(rng), phi = angle(rng), e = eps(rng), d = det(rng) * omega;
        const ComplexMatrix h = 0.5 * theta * (1 + e) * (std::cos(phi) * testing::sigma_x() + std::sin(phi) * testing::sigma_y()) +
                                (d * theta / (2 * omega)) * testing::sigma_z();
        const ComplexMatrix u = noisy_rotation_matrix(theta, phi, e, d, omega);
        EXPECT_LT(max_diff(u, testing::expm_minus_i(h)), 1e-12);
        EXPECT_LT(unitarity_defect(u), 1e-12);
    }
}

TEST(NoisyRotation, RejectsNonPositiveRabiFrequency)
{
    EXPECT_THROW(noisy_rotation_matrix(pi, 0, 0, 0, 0.0), std::invalid_argument);
    EXPECT_THROW(noisy_rotation_matrix(pi, 0, 0, 0, -1.0), std::invalid_argument);
}

TEST(Hadamard, MatchesStandardMatrix)
{
    ComplexMatrix expected(2, 2);
    expected << 1, 1, 1, -1;
    expected /= std::sqrt(2.0);
    EXPECT_LT(max_diff(hadamard_matrix(), expected), 1e-12);
    EXPECT_LT(max_diff(hadamard_matrix() * hadamard_matrix(), identity2()), 1e-12);

    const QuantumState plus = apply_unitary(hadamard_matrix(), QuantumState::basis(1, 0));
    EXPECT_NEAR(plus[0].real(), 1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(plus[1].real(), 1 / std::sqrt(2.0), 1e-12);
}

TEST(GateConstructors, AllUnitaryForRandomAngles)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> angle(-10, 10);
    for (int i = 0; i < 500; ++i) {
        EXPECT_LT(unitarity_defect(rotation_matrix(angle(rng), angle(rng))), 1e-12);
        EXPECT_LT(unitarity_defect(phase_matrix(angle(rng))), 1e-12);
        EXPECT_LT(unitarity_defect(noisy_rotation_matrix(angle(rng), angle(rng), 0.1 * angle(rng), angle(rng), 2.0)),
                  1e-12);
    }
    EXPECT_LT(unitarity_defect(hadamard_matrix()), 1e-12);
}

TEST(EmbedSingleQubit, Examples)
{
    for (int n = 1; n <= 4; ++n) {
        for (int t = 1; t <= n; ++t) {
            const auto dim = static_cast<Eigen::Index>(1) << n;
            EXPECT_EQ(embed_single_qubit(identity2(), t, n), ComplexMatrix::Identity(dim, dim));
        }
    }
    const QuantumState flipped = apply_unitary(embed_single_qubit(pauli_x(), 1, 2), QuantumState::basis(2, 0));
    EXPECT_EQ(flipped[2], Cx(1, 0));  // |10>

    const ComplexMatrix z3 = embed_single_qubit(pauli_z(), 3, 3);
    for (Eigen::Index i = 0; i < 8; ++i) {
        EXPECT_EQ(z3(i, i).real(), (i % 2 == 0) ? 1.0 : -1.0);
    }
}

TEST(EmbedSingleQubit, MatchesKroneckerOracle)
{
    const ComplexMatrix g = rotation_matrix(0.7, 1.9);
    for (int n = 1; n <= 5; ++n) {
        for (int t = 1; t <= n; ++t) {
            EXPECT_LT(max_diff(embed_single_qubit(g, t, n), testing::kron_embed(g, t, n)), 1e-15);
        }
    }
}

TEST(EmbedSingleQubit, RejectsBadTarget)
{
    EXPECT_THROW(embed_single_qubit(pauli_x(), 0, 3), std::out_of_range);
    EXPECT_THROW(embed_single_qubit(pauli_x(), 4, 3), std::out_of_range);
    EXPECT_THROW(embed_single_qubit(ComplexMatrix::Identity(4, 4), 1, 3), std::invalid_argument);
}

IsingCouplings three_ion_couplings(CouplingConvention convention)
{
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(3, 3);
    j(0, 1) = j(1, 0) = 2 * pi * 34;
    j(1, 2) = j(2, 1) = 2 * pi * 39;
    j(0, 2) = j(2, 0) = 2 * pi * 27;
    return {j, convention};
}

TEST(FreeEvolution, ZeroTimeIsIdentity)
{
    for (auto c : {CouplingConvention::PairwiseGate, CouplingConvention::OrderedPairSum}) {
        EXPECT_LT(max_diff(free_evolution_operator(0.0, three_ion_couplings(c)), ComplexMatrix::Identity(8, 8)), 1e-15);
    }
}

TEST(FreeEvolution, AllUpPhaseUnderOrderedPairSum)
{
    const auto c = three_ion_couplings(CouplingConvention::OrderedPairSum);
    const double t = 1.7e-3;
    const Cx phase = free_evolution_operator(t, c)(0, 0);
    const double expected = t * 2 * pi * (34 + 27 + 39);
    EXPECT_NEAR(std::arg(phase * std::polar(1.0, -expected)), 0.0, 1e-12);
}

TEST(FreeEvolution, OrderedPairSumMatchesHamiltonianOracle)
{
    const auto c = three_ion_couplings(CouplingConvention::OrderedPairSum);
    for (double t : {0.5e-3, 3.69e-3, 4.87e-3}) {
        EXPECT_LT(max_diff(free_evolution_operator(t, c), testing::ising_evolution_ordered_pairs(c.j, t)), 1e-10);
    }
}

TEST(FreeEvolution, PairwiseGateIsHalfTheOrderedPairAngle)
{
    const auto pairwise = three_ion_couplings(CouplingConvention::PairwiseGate);
    const auto ordered = three_ion_couplings(CouplingConvention::OrderedPairSum);
    const double t = 3.69e-3;
    EXPECT_LT(max_diff(free_evolution_operator(t, pairwise), free_evolution_operator(t / 2, ordered)), 1e-14);
}

TEST(FreeEvolution, PairAngleOverFirstPeriodIsAboutQuarterPi)
{
    // J12 T1 = 2 pi * 34 Hz * 3.69 ms = 0.78829 rad.
    const double angle = 2 * pi * 34 * 3.69e-3;
    EXPECT_NEAR(angle, 0.78829, 1e-5);
    EXPECT_NEAR(angle, pi / 4, 0.003);
}

TEST(FreeEvolution, RejectsNegativeTimeAndBadCouplings)
{
    EXPECT_THROW(free_evolution_operator(-1e-6, three_ion_couplings(CouplingConvention::PairwiseGate)),
                 std::invalid_argument);
    auto bad = three_ion_couplings(CouplingConvention::PairwiseGate);
    bad.j(0, 1) = 1.0;
    EXPECT_THROW(free_evolution_operator(1e-3, bad), std::invalid_argument);
    bad = three_ion_couplings(CouplingConvention::PairwiseGate);
    bad.j(2, 2) = 1.0;
    EXPECT_THROW(free_evolution_operator(1e-3, bad), std::invalid_argument);
}

TEST(IdealQft, OneQubitIsHadamard)
{
    EXPECT_LT(max_diff(ideal_qft_matrix(1), hadamard_matrix()), 1e-12);
}

TEST(IdealQft, UniformInputCollapsesToZero)
{
    ComplexVector plus = ComplexVector::Constant(8, 1.0 / std::sqrt(8.0));
    const auto p = measurement_probabilities(apply_unitary(ideal_qft_matrix(3), QuantumState(3, plus)));
    EXPECT_NEAR(p[0], 1.0, 1e-12);
}

TEST(IdealQft, PlusOneOneGivesFourPeaks)
{
    ComplexVector x = ComplexVector::Zero(8);
    x[3] = x[7] = 1.0 / std::sqrt(2.0);
    const auto p = measurement_probabilities(apply_unitary(ideal_qft_matrix(3), QuantumState(3, x)));
    for (std::size_t k = 0; k < 8; ++k) {
        EXPECT_NEAR(p[k], (k % 2 == 0) ? 0.25 : 0.0, 1e-12) << "k=" << k;
    }
}

TEST(IdealQft, UnitaryUpToEightQubits)
{
    for (int n = 1; n <= 8; ++n) {
        EXPECT_LT(unitarity_defect(ideal_qft_matrix(n)), 1e-10) << "n=" << n;
    }
}

TEST(IdealQft, MatchesTermByTermSumForRandomStates)
{
    std::mt19937_64 rng(23);
    std::normal_distribution<double> g;
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            ComplexVector x(Eigen::Index{1} << n);
            for (Eigen::Index i = 0; i < x.size(); ++i) {
                x[i] = Cx(g(rng), g(rng));
            }
            x.normalize();
            const auto p = measurement_probabilities(apply_unitary(ideal_qft_matrix(n), QuantumState(n, x)));
            const auto expected = testing::brute_force_qft_probabilities(x);
            for (std::size_t k = 0; k < expected.size(); ++k) {
                EXPECT_NEAR(p[k], expected[k], 1e-12);
            }
        }
    }
}

TEST(IdealQft, RejectsOutOfRange)
{
    EXPECT_THROW(ideal_qft_matrix(0), std::invalid_argument);
    EXPECT_THROW(ideal_qft_matrix(13), std::invalid_argument);
}

}  // namespace
}  // namespace ionqft::qsim
