#include "ionqft/qsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ionqft::qsim {

namespace {

void check_qubit_count(int n_qubits)
{
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                                    "], got " + std::to_string(n_qubits));
    }
}

void check_target(int target, int n_qubits)
{
    if (target < 1 || target > n_qubits) {
        throw std::out_of_range("qubit index " + std::to_string(target) + " outside [1, " +
                                std::to_string(n_qubits) + "]");
    }
}

void check_gate_2x2(const ComplexMatrix& gate)
{
    if (gate.rows() != 2 || gate.cols() != 2) {
        throw std::invalid_argument("single-qubit gate must be 2x2");
    }
}

bool all_finite(const ComplexMatrix& m)
{
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag())) {
                return false;
            }
        }
    }
    return true;
}

void check_permutation(std::span<const int> permutation, int n_qubits)
{
    if (static_cast<int>(permutation.size()) != n_qubits) {
        throw std::invalid_argument("permutation length does not match qubit count");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n_qubits), false);
    for (int label : permutation) {
        if (label < 1 || label > n_qubits || seen[static_cast<std::size_t>(label - 1)]) {
            throw std::invalid_argument("relabeling is not a bijection on qubit labels");
        }
        seen[static_cast<std::size_t>(label - 1)] = true;
    }
}

}  // namespace

std::size_t dimension_for(int n_qubits)
{
    check_qubit_count(n_qubits);
    return std::size_t{1} << n_qubits;
}

QuantumState::QuantumState(int n_qubits, ComplexVector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes))
{
    if (static_cast<std::size_t>(amplitudes_.size()) != dimension_for(n_qubits)) {
        throw std::invalid_argument("amplitude vector length must be 2^n");
    }
    if (!all_finite(amplitudes_)) {
        throw std::invalid_argument("amplitudes must be finite");
    }
    const double norm2 = amplitudes_.squaredNorm();
    if (std::abs(norm2 - 1.0) > kNormTolerance) {
        throw std::invalid_argument("state is not normalized: |psi|^2 = " + std::to_string(norm2));
    }
}

QuantumState QuantumState::basis(int n_qubits, std::size_t index)
{
    const std::size_t dim = dimension_for(n_qubits);
    if (index >= dim) {
        throw std::out_of_range("basis index out of range");
    }
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
    v[static_cast<Eigen::Index>(index)] = 1.0;
    return QuantumState(n_qubits, std::move(v));
}

DensityMatrix::DensityMatrix(int n_qubits, ComplexMatrix matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix))
{
    const auto dim = static_cast<Eigen::Index>(dimension_for(n_qubits));
    if (matrix_.rows() != dim || matrix_.cols() != dim) {
        throw std::invalid_argument("density matrix must be 2^n x 2^n");
    }
    if (!all_finite(matrix_)) {
        throw std::invalid_argument("density matrix entries must be finite");
    }
    const double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermitianTolerance) {
        throw std::invalid_argument("density matrix is not Hermitian (defect " + std::to_string(herm) + ")");
    }
    const Complex tr = matrix_.trace();
    if (std::abs(tr - Complex{1.0, 0.0}) > kNormTolerance) {
        throw std::invalid_argument("density matrix trace is not one: " + std::to_string(tr.real()));
    }
}

DensityMatrix DensityMatrix::from_pure(const QuantumState& state)
{
    const ComplexVector& a = state.amplitudes();
    return DensityMatrix(state.n_qubits(), a * a.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits)
{
    const auto dim = static_cast<Eigen::Index>(dimension_for(n_qubits));
    return DensityMatrix(n_qubits, ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::purity() const
{
    // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    return matrix_.squaredNorm();
}

double DensityMatrix::min_eigenvalue() const
{
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(matrix_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

ProbabilityDistribution::ProbabilityDistribution(std::vector<double> p) : p_(std::move(p))
{
    if (p_.empty()) {
        throw std::invalid_argument("probability distribution must be nonempty");
    }
    double sum = 0.0;
    for (double x : p_) {
        if (!std::isfinite(x) || x < 0.0) {
            throw std::invalid_argument("probabilities must be finite and nonnegative");
        }
        sum += x;
    }
    if (std::abs(sum - 1.0) > kProbabilityTolerance) {
        throw std::invalid_argument("probabilities sum to " + std::to_string(sum));
    }
}

ProbabilityDistribution ProbabilityDistribution::uniform(std::size_t dim)
{
    if (dim == 0) {
        throw std::invalid_argument("dimension must be positive");
    }
    return ProbabilityDistribution(std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

ProbabilityDistribution ProbabilityDistribution::point_mass(std::size_t dim, std::size_t index)
{
    if (index >= dim) {
        throw std::out_of_range("point mass index out of range");
    }
    std::vector<double> p(dim, 0.0);
    p[index] = 1.0;
    return ProbabilityDistribution(std::move(p));
}

double unitarity_defect(const ComplexMatrix& u)
{
    if (u.rows() != u.cols()) {
        throw std::invalid_argument("operator must be square");
    }
    const ComplexMatrix prod = u.adjoint() * u;
    return (prod - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

bool is_unitary(const ComplexMatrix& u, double tol)
{
    return u.rows() == u.cols() && unitarity_defect(u) < tol;
}

QuantumState apply_unitary(const ComplexMatrix& u, const QuantumState& state)
{
    if (u.rows() != u.cols() || static_cast<std::size_t>(u.cols()) != state.dim()) {
        throw std::invalid_argument("operator dimension does not match state");
    }
    ComplexVector out = u * state.amplitudes();
    return QuantumState(state.n_qubits(), std::move(out));
}

DensityMatrix apply_unitary(const ComplexMatrix& u, const DensityMatrix& rho)
{
    if (u.rows() != u.cols() || static_cast<std::size_t>(u.cols()) != rho.dim()) {
        throw std::invalid_argument("operator dimension does not match density matrix");
    }
    ComplexMatrix out = u * rho.matrix() * u.adjoint();
    // Symmetrize away the round-off so Hermiticity holds exactly.
    out = 0.5 * (out + out.adjoint()).eval();
    return DensityMatrix(rho.n_qubits(), std::move(out));
}

void apply_single_qubit_inplace(ComplexVector& psi, const ComplexMatrix& gate, int target, int n_qubits)
{
    check_gate_2x2(gate);
    check_target(target, n_qubits);
    const Eigen::Index stride = Eigen::Index{1} << (n_qubits - target);
    const Eigen::Index dim = psi.size();
    const Complex g00 = gate(0, 0), g01 = gate(0, 1), g10 = gate(1, 0), g11 = gate(1, 1);
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (i & stride) {
            continue;
        }
        const Complex a0 = psi[i];
        const Complex a1 = psi[i | stride];
        psi[i] = g00 * a0 + g01 * a1;
        psi[i | stride] = g10 * a0 + g11 * a1;
    }
}

void apply_single_qubit_inplace(ComplexMatrix& rho, const ComplexMatrix& gate, int target, int n_qubits)
{
    check_gate_2x2(gate);
    check_target(target, n_qubits);
    const Eigen::Index stride = Eigen::Index{1} << (n_qubits - target);
    const Eigen::Index dim = rho.rows();
    const Complex g00 = gate(0, 0), g01 = gate(0, 1), g10 = gate(1, 0), g11 = gate(1, 1);

    // rho <- G rho: mix row pairs.
    for (Eigen::Index c = 0; c < dim; ++c) {
        for (Eigen::Index r = 0; r < dim; ++r) {
            if (r & stride) {
                continue;
            }
            const Complex a0 = rho(r, c);
            const Complex a1 = rho(r | stride, c);
            rho(r, c) = g00 * a0 + g01 * a1;
            rho(r | stride, c) = g10 * a0 + g11 * a1;
        }
    }
    // rho <- rho G^dagger: mix column pairs.
    const Complex h00 = std::conj(g00), h01 = std::conj(g10), h10 = std::conj(g01), h11 = std::conj(g11);
    for (Eigen::Index c = 0; c < dim; ++c) {
        if (c & stride) {
            continue;
        }
        for (Eigen::Index r = 0; r < dim; ++r) {
            const Complex b0 = rho(r, c);
            const Complex b1 = rho(r, c | stride);
            rho(r, c) = b0 * h00 + b1 * h10;
            rho(r, c | stride) = b0 * h01 + b1 * h11;
        }
    }
}

void apply_diagonal_inplace(ComplexMatrix& rho, const ComplexVector& diag)
{
    if (diag.size() != rho.rows() || rho.rows() != rho.cols()) {
        throw std::invalid_argument("diagonal operator dimension mismatch");
    }
    for (Eigen::Index c = 0; c < rho.cols(); ++c) {
        const Complex dc = std::conj(diag[c]);
        for (Eigen::Index r = 0; r < rho.rows(); ++r) {
            rho(r, c) *= diag[r] * dc;
        }
    }
}

QuantumState apply_single_qubit(const ComplexMatrix& gate, int target, const QuantumState& state)
{
    ComplexVector psi = state.amplitudes();
    apply_single_qubit_inplace(psi, gate, target, state.n_qubits());
    return QuantumState(state.n_qubits(), std::move(psi));
}

DensityMatrix apply_single_qubit(const ComplexMatrix& gate, int target, const DensityMatrix& rho)
{
    ComplexMatrix m = rho.matrix();
    apply_single_qubit_inplace(m, gate, target, rho.n_qubits());
    m = 0.5 * (m + m.adjoint()).eval();
    return DensityMatrix(rho.n_qubits(), std::move(m));
}

std::size_t permute_basis_index(std::size_t index, std::span<const int> permutation, int n_qubits)
{
    check_permutation(permutation, n_qubits);
    std::size_t out = 0;
    for (int k = 1; k <= n_qubits; ++k) {
        const int from_bit = n_qubits - k;
        const int to_bit = n_qubits - permutation[static_cast<std::size_t>(k - 1)];
        out |= ((index >> from_bit) & std::size_t{1}) << to_bit;
    }
    return out;
}

QuantumState permute_qubits(const QuantumState& state, std::span<const int> permutation)
{
    check_permutation(permutation, state.n_qubits());
    ComplexVector out(state.amplitudes().size());
    for (std::size_t i = 0; i < state.dim(); ++i) {
        out[static_cast<Eigen::Index>(permute_basis_index(i, permutation, state.n_qubits()))] = state[i];
    }
    return QuantumState(state.n_qubits(), std::move(out));
}

DensityMatrix permute_qubits(const DensityMatrix& rho, std::span<const int> permutation)
{
    const int n = rho.n_qubits();
    check_permutation(permutation, n);
    std::vector<Eigen::Index> map(rho.dim());
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        map[i] = static_cast<Eigen::Index>(permute_basis_index(i, permutation, n));
    }
    ComplexMatrix out(rho.matrix().rows(), rho.matrix().cols());
    for (std::size_t c = 0; c < rho.dim(); ++c) {
        for (std::size_t r = 0; r < rho.dim(); ++r) {
            out(map[r], map[c]) = rho(r, c);
        }
    }
    return DensityMatrix(n, std::move(out));
}

}  // namespace ionqft::qsim
