#pragma once

// Dense state types for small qubit registers.
//
// Basis ordering: qubit 1 is the most significant bit of a basis index, so
// for three qubits |q1 q2 q3> has index 4*q1 + 2*q2 + q3.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace ionqft::qsim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr int kMaxQubits = 12;

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kProbabilityTolerance = 1e-9;
// Diagonal entries of a density matrix above this (negative) value are
// treated as round-off and clamped to zero.
inline constexpr double kNegativeProbabilityFloor = -1e-9;

std::size_t dimension_for(int n_qubits);

class QuantumState {
public:
    // Throws std::invalid_argument if the length is not 2^n or the norm is
    // off by more than kNormTolerance.
    QuantumState(int n_qubits, ComplexVector amplitudes);

    static QuantumState basis(int n_qubits, std::size_t index);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
    const ComplexVector& amplitudes() const { return amplitudes_; }
    Complex operator[](std::size_t i) const { return amplitudes_[static_cast<Eigen::Index>(i)]; }

    double norm_squared() const { return amplitudes_.squaredNorm(); }

private:
    int n_qubits_;
    ComplexVector amplitudes_;
};

class DensityMatrix {
public:
    // Validates shape, Hermiticity and unit trace (both within 1e-10).
    // Positivity is not checked here; see min_eigenvalue().
    DensityMatrix(int n_qubits, ComplexMatrix matrix);

    static DensityMatrix from_pure(const QuantumState& state);
    static DensityMatrix maximally_mixed(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
    const ComplexMatrix& matrix() const { return matrix_; }
    Complex operator()(std::size_t r, std::size_t c) const
    {
        return matrix_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }

    Complex trace() const { return matrix_.trace(); }
    double purity() const;
    double min_eigenvalue() const;

private:
    int n_qubits_;
    ComplexMatrix matrix_;
};

class ProbabilityDistribution {
public:
    // Requires p_i >= 0 and sum within 1e-9 of one.
    explicit ProbabilityDistribution(std::vector<double> p);

    static ProbabilityDistribution uniform(std::size_t dim);
    static ProbabilityDistribution point_mass(std::size_t dim, std::size_t index);

    std::size_t size() const { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }
    std::span<const double> values() const { return p_; }

private:
    std::vector<double> p_;
};

// Largest |(U^dagger U - I)_ij|.
double unitarity_defect(const ComplexMatrix& u);
bool is_unitary(const ComplexMatrix& u, double tol = 1e-12);

QuantumState apply_unitary(const ComplexMatrix& u, const QuantumState& state);
DensityMatrix apply_unitary(const ComplexMatrix& u, const DensityMatrix& rho);

// Applies a 2x2 gate on qubit `target` (1-based) without forming the full
// 2^n x 2^n operator. Equivalent to apply_unitary(embed_single_qubit(...)).
QuantumState apply_single_qubit(const ComplexMatrix& gate, int target, const QuantumState& state);
DensityMatrix apply_single_qubit(const ComplexMatrix& gate, int target, const DensityMatrix& rho);

// In-place kernels used by the simulators. `rho` must be 2^n x 2^n.
void apply_single_qubit_inplace(ComplexVector& psi, const ComplexMatrix& gate, int target, int n_qubits);
void apply_single_qubit_inplace(ComplexMatrix& rho, const ComplexMatrix& gate, int target, int n_qubits);
void apply_diagonal_inplace(ComplexMatrix& rho, const ComplexVector& diag);

// Moves the bit of qubit k to the position of qubit permutation[k-1].
// `permutation` holds 1-based labels.
std::size_t permute_basis_index(std::size_t index, std::span<const int> permutation, int n_qubits);
QuantumState permute_qubits(const QuantumState& state, std::span<const int> permutation);
DensityMatrix permute_qubits(const DensityMatrix& rho, std::span<const int> permutation);

}  // namespace ionqft::qsim
