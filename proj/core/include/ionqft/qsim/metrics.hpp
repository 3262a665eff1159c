#pragma once

#include <cstddef>
#include <vector>

#include "ionqft/qsim/linalg.hpp"

namespace ionqft::qsim {

// Computational-basis probabilities. For density matrices the real part of
// the diagonal is used; entries in [-1e-9, 0) are clamped to zero and the
// vector renormalized. Anything more negative throws std::domain_error.
ProbabilityDistribution measurement_probabilities(const QuantumState& state);
ProbabilityDistribution measurement_probabilities(const DensityMatrix& rho);

// Squared statistical overlap (sum_i sqrt(p_i q_i))^2.
double sso(const ProbabilityDistribution& p, const ProbabilityDistribution& q);

// 1 - total variation distance.
double distinguishability(const ProbabilityDistribution& p, const ProbabilityDistribution& q);

// Indices of the k largest probabilities, largest first; ties keep the
// lower index first.
std::vector<std::size_t> top_k_indices(const ProbabilityDistribution& p, std::size_t k);

}  // namespace ionqft::qsim
