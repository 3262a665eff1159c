#include "ionqft/qsim/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ionqft::qsim {

namespace {

constexpr Complex kI{0.0, 1.0};

ComplexMatrix make2(Complex a, Complex b, Complex c, Complex d)
{
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

}  // namespace

ComplexMatrix identity2() { return ComplexMatrix::Identity(2, 2); }
ComplexMatrix pauli_x() { return make2(0.0, 1.0, 1.0, 0.0); }
ComplexMatrix pauli_y() { return make2(0.0, -kI, kI, 0.0); }
ComplexMatrix pauli_z() { return make2(1.0, 0.0, 0.0, -1.0); }

ComplexMatrix rotation_matrix(double theta, double phi)
{
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    return make2(c, -kI * std::exp(-kI * phi) * s,
                 -kI * std::exp(kI * phi) * s, c);
}

ComplexMatrix phase_matrix(double phi)
{
    return make2(std::exp(-kI * phi), 0.0, 0.0, std::exp(kI * phi));
}

ComplexMatrix noisy_rotation_matrix(double theta, double phi, double epsilon, double delta, double omega_rabi)
{
    if (!(omega_rabi > 0.0)) {
        throw std::invalid_argument("Rabi frequency must be positive");
    }
    const double transverse = 0.5 * theta * (1.0 + epsilon);
    const double hx = transverse * std::cos(phi);
    const double hy = transverse * std::sin(phi);
    const double hz = delta * theta / (2.0 * omega_rabi);
    const double r = std::sqrt(hx * hx + hy * hy + hz * hz);
    if (r == 0.0) {
        return identity2();
    }
    const double c = std::cos(r);
    const double s = std::sin(r) / r;
    // cos r I - i (sin r / r) (hx sx + hy sy + hz sz)
    return make2(Complex{c, -s * hz}, Complex{-s * hy, -s * hx},
                 Complex{s * hy, -s * hx}, Complex{c, s * hz});
}

ComplexMatrix hadamard_matrix()
{
    using std::numbers::pi;
    return kI * rotation_matrix(pi / 2.0, -pi / 2.0) * rotation_matrix(pi, 0.0);
}

ComplexMatrix embed_single_qubit(const ComplexMatrix& gate, int target, int n_qubits)
{
    if (gate.rows() != 2 || gate.cols() != 2) {
        throw std::invalid_argument("single-qubit gate must be 2x2");
    }
    const auto dim = static_cast<Eigen::Index>(dimension_for(n_qubits));
    if (target < 1 || target > n_qubits) {
        throw std::out_of_range("qubit index " + std::to_string(target) + " outside [1, " +
                                std::to_string(n_qubits) + "]");
    }
    const Eigen::Index stride = Eigen::Index{1} << (n_qubits - target);
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            // Non-target bits must agree.
            if ((r & ~stride) != (c & ~stride)) {
                continue;
            }
            out(r, c) = gate((r & stride) ? 1 : 0, (c & stride) ? 1 : 0);
        }
    }
    return out;
}

ComplexMatrix ideal_qft_matrix(int n_qubits)
{
    const auto dim = static_cast<Eigen::Index>(dimension_for(n_qubits));
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    ComplexMatrix out(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            // Reduce j*k mod N first so the angle stays in [0, 2 pi).
            const auto jk = (j * k) % dim;
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(jk) / static_cast<double>(dim);
            out(k, j) = scale * Complex{std::cos(angle), std::sin(angle)};
        }
    }
    return out;
}

void IsingCouplings::validate() const
{
    if (j.rows() != j.cols()) {
        throw std::invalid_argument("coupling matrix must be square");
    }
    dimension_for(static_cast<int>(j.rows()));
    for (Eigen::Index k = 0; k < j.rows(); ++k) {
        if (j(k, k) != 0.0) {
            throw std::invalid_argument("coupling matrix must have zero diagonal");
        }
        for (Eigen::Index l = 0; l < j.cols(); ++l) {
            if (!std::isfinite(j(k, l))) {
                throw std::invalid_argument("coupling constants must be finite");
            }
            if (j(k, l) != j(l, k)) {
                throw std::invalid_argument("coupling matrix must be symmetric");
            }
        }
    }
}

ComplexVector free_evolution_phases(double t, const IsingCouplings& couplings)
{
    if (!(t >= 0.0)) {
        throw std::invalid_argument("evolution time must be nonnegative");
    }
    couplings.validate();
    const int n = couplings.n_qubits();
    const auto dim = static_cast<Eigen::Index>(dimension_for(n));
    const double f = couplings.pair_phase_factor();
    ComplexVector d(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        double energy = 0.0;
        for (int k = 0; k < n; ++k) {
            const int zk = ((i >> (n - 1 - k)) & 1) ? -1 : 1;
            for (int l = k + 1; l < n; ++l) {
                const int zl = ((i >> (n - 1 - l)) & 1) ? -1 : 1;
                energy += couplings.j(k, l) * zk * zl;
            }
        }
        const double angle = t * f * energy;
        d[i] = Complex{std::cos(angle), std::sin(angle)};
    }
    return d;
}

ComplexMatrix free_evolution_operator(double t, const IsingCouplings& couplings)
{
    return free_evolution_phases(t, couplings).asDiagonal();
}

}  // namespace ionqft::qsim
