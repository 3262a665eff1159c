#include "ionqft/qsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ionqft::qsim {

namespace {

void check_same_length(const ProbabilityDistribution& p, const ProbabilityDistribution& q)
{
    if (p.size() != q.size()) {
        throw std::invalid_argument("distributions differ in length: " + std::to_string(p.size()) + " vs " +
                                    std::to_string(q.size()));
    }
}

ProbabilityDistribution clamp_and_normalize(std::vector<double> p)
{
    double sum = 0.0;
    for (double& x : p) {
        if (x < kNegativeProbabilityFloor) {
            throw std::domain_error("negative probability " + std::to_string(x) + ": corrupted state");
        }
        x = std::max(x, 0.0);
        sum += x;
    }
    if (!(sum > 0.0)) {
        throw std::domain_error("state has zero total probability");
    }
    for (double& x : p) {
        x /= sum;
    }
    return ProbabilityDistribution(std::move(p));
}

}  // namespace

ProbabilityDistribution measurement_probabilities(const QuantumState& state)
{
    std::vector<double> p(state.dim());
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = std::norm(state[i]);
    }
    return clamp_and_normalize(std::move(p));
}

ProbabilityDistribution measurement_probabilities(const DensityMatrix& rho)
{
    std::vector<double> p(rho.dim());
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = rho(i, i).real();
    }
    return clamp_and_normalize(std::move(p));
}

double sso(const ProbabilityDistribution& p, const ProbabilityDistribution& q)
{
    check_same_length(p, q);
    double overlap = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        overlap += std::sqrt(p[i] * q[i]);
    }
    return std::clamp(overlap * overlap, 0.0, 1.0);
}

double distinguishability(const ProbabilityDistribution& p, const ProbabilityDistribution& q)
{
    check_same_length(p, q);
    double tv = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        tv += std::abs(p[i] - q[i]);
    }
    return std::clamp(1.0 - 0.5 * tv, 0.0, 1.0);
}

std::vector<std::size_t> top_k_indices(const ProbabilityDistribution& p, std::size_t k)
{
    std::vector<std::size_t> idx(p.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return p[a] > p[b]; });
    idx.resize(std::min(k, idx.size()));
    return idx;
}

}  // namespace ionqft::qsim
