#pragma once

#include <Eigen/Dense>

#include "ionqft/qsim/linalg.hpp"

namespace ionqft::qsim {

// sigma_z = diag(1, -1): |0> carries eigenvalue +1.
ComplexMatrix identity2();
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Phased rotation exp(-i theta/2 (sigma_x cos phi + sigma_y sin phi)),
/// evaluated from its half-angle closed form.
ComplexMatrix rotation_matrix(double theta, double phi);

/// Phase gate exp(-i phi sigma_z) = diag(e^{-i phi}, e^{i phi}).
ComplexMatrix phase_matrix(double phi);

/// Phased rotation with coherent over-rotation `epsilon` and detuning
/// `delta` (rad/s):
///
///   exp(-i [ theta/2 (1+epsilon) (sigma_x cos phi + sigma_y sin phi)
///            + delta theta / (2 omega_rabi) sigma_z ])
///
/// The exponent is -i times a traceless Hermitian matrix h.sigma, so the
/// result is cos|h| I - i sin|h| (h/|h|).sigma and is exactly unitary.
/// Throws std::invalid_argument if omega_rabi <= 0.
ComplexMatrix noisy_rotation_matrix(double theta, double phi, double epsilon, double delta, double omega_rabi);

/// Hadamard assembled from two microwave pulses, i R(pi/2, -pi/2) R(pi, 0).
ComplexMatrix hadamard_matrix();

// I x ... x gate x ... x I with the gate on qubit `target` (1-based,
// qubit 1 leftmost).
ComplexMatrix embed_single_qubit(const ComplexMatrix& gate, int target, int n_qubits);

// Entry (k, j) = exp(2 pi i j k / N) / sqrt(N), N = 2^n, 1 <= n <= 12.
ComplexMatrix ideal_qft_matrix(int n_qubits);

// How the Ising sum maps onto the free-evolution phase of each pair.
enum class CouplingConvention {
    // exp(i t/2 J_kl z_k z_l) per unordered pair: the two-ion entangling
    // gate U_kl(t) composed over all pairs.
    PairwiseGate,
    // Hamiltonian summed over ordered pairs k != l, so each unordered pair
    // accrues exp(i t J_kl z_k z_l).
    OrderedPairSum,
};

struct IsingCouplings {
    // Symmetric, zero diagonal, rad/s.
    Eigen::MatrixXd j;
    CouplingConvention convention = CouplingConvention::PairwiseGate;

    int n_qubits() const { return static_cast<int>(j.rows()); }
    double pair_phase_factor() const { return convention == CouplingConvention::PairwiseGate ? 0.5 : 1.0; }
    void validate() const;
};

// Diagonal of the free evolution U(t). For basis state with spins z_k = +1
// (bit 0) or -1 (bit 1): phase exp(i t f sum_{k<l} J_kl z_k z_l), with f
// from the coupling convention. Throws std::invalid_argument if t < 0.
ComplexVector free_evolution_phases(double t, const IsingCouplings& couplings);
ComplexMatrix free_evolution_operator(double t, const IsingCouplings& couplings);

}  // namespace ionqft::qsim
