#include "ionqft/ion/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ionqft/qsim/channels.hpp"
#include "ionqft/qsim/gates.hpp"
#include "ionqft/qsim/metrics.hpp"

namespace ionqft::ion {

using qsim::ComplexMatrix;
using qsim::ComplexVector;
using qsim::DensityMatrix;
using qsim::ProbabilityDistribution;
using qsim::QuantumState;

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;
constexpr std::size_t kRunsPerBatch = 256;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

// Symmetric uniform sample in [-half_width, half_width]. Built from raw
// engine bits so the stream is identical across standard libraries.
double symmetric_uniform(std::mt19937_64& rng, double half_width)
{
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return (2.0 * u - 1.0) * half_width;
}

void check_dimensions(const GateSequence& sequence, const QuantumState& input, const IonChainConfig& config)
{
    config.validate();
    if (sequence.n_qubits() != input.n_qubits() || config.n_qubits != input.n_qubits()) {
        throw std::invalid_argument("sequence, configuration and input state disagree on qubit count");
    }
}

// Free-evolution diagonals do not depend on the noise draw; compute once.
std::vector<std::optional<ComplexVector>> precompute_phases(const GateSequence& sequence,
                                                            const IonChainConfig& config)
{
    std::vector<std::optional<ComplexVector>> phases(sequence.size());
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        if (const auto* f = std::get_if<FreeEvolution>(&sequence.events()[i])) {
            phases[i] = qsim::free_evolution_phases(f->duration, config.couplings);
        }
    }
    return phases;
}

ComplexMatrix permute_matrix(const ComplexMatrix& rho, const std::vector<int>& permutation, int n_qubits)
{
    const auto dim = static_cast<std::size_t>(rho.rows());
    std::vector<Eigen::Index> map(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        map[i] = static_cast<Eigen::Index>(qsim::permute_basis_index(i, permutation, n_qubits));
    }
    ComplexMatrix out(rho.rows(), rho.cols());
    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t r = 0; r < dim; ++r) {
            out(map[r], map[c]) = rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return out;
}

ComplexMatrix run_trajectory(const GateSequence& sequence, const ComplexMatrix& rho0, const IonChainConfig& config,
                             const NoiseConfig& noise, const std::vector<std::optional<ComplexVector>>& phases,
                             std::uint64_t run_index)
{
    std::mt19937_64 rng(derive_run_seed(noise.seed, run_index));
    const int n = sequence.n_qubits();
    ComplexMatrix rho = rho0;
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        std::visit(overloaded{
                       [&](const Pulse& p) {
                           // Draw order is fixed: epsilon, then delta.
                           const double epsilon = symmetric_uniform(rng, noise.epsilon_max);
                           const double delta = symmetric_uniform(rng, noise.delta_over_omega_max) * config.omega_rabi;
                           const ComplexMatrix g =
                               qsim::noisy_rotation_matrix(p.theta, p.phi, epsilon, delta, config.omega_rabi);
                           qsim::apply_single_qubit_inplace(rho, g, p.qubit, n);
                       },
                       [&](const FreeEvolution& f) {
                           qsim::apply_diagonal_inplace(rho, *phases[i]);
                           qsim::dephase_inplace(rho, noise.dephasing_rate, f.duration);
                       },
                       [&](const Relabel& r) { rho = permute_matrix(rho, r.permutation, n); },
                   },
                   sequence.events()[i]);
    }
    return rho;
}

ComplexMatrix hermitize(const ComplexMatrix& m)
{
    return 0.5 * (m + m.adjoint());
}

}  // namespace

void NoiseConfig::validate() const
{
    if (!(epsilon_max >= 0.0) || !std::isfinite(epsilon_max)) {
        throw std::invalid_argument("over-rotation half-width must be nonnegative");
    }
    if (!(delta_over_omega_max >= 0.0) || !std::isfinite(delta_over_omega_max)) {
        throw std::invalid_argument("detuning half-width must be nonnegative");
    }
    if (!(dephasing_rate >= 0.0) || !std::isfinite(dephasing_rate)) {
        throw std::invalid_argument("dephasing rate must be nonnegative");
    }
    if (!(depolarization >= 0.0 && depolarization <= 1.0)) {
        throw std::invalid_argument("depolarization must lie in [0, 1]");
    }
    if (runs < 1) {
        throw std::invalid_argument("ensemble needs at least one run");
    }
}

NoiseConfig NoiseConfig::noiseless()
{
    NoiseConfig n;
    n.epsilon_max = 0.0;
    n.delta_over_omega_max = 0.0;
    n.dephasing_rate = 0.0;
    n.depolarization = 0.0;
    n.runs = 1;
    return n;
}

QuantumState input_state(std::string_view label)
{
    if (label.empty() || static_cast<int>(label.size()) > qsim::kMaxQubits) {
        throw std::invalid_argument("input label must have 1 to 12 symbols");
    }
    const double h = 1.0 / std::sqrt(2.0);
    ComplexVector v(1);
    v[0] = 1.0;
    for (char c : label) {
        ComplexVector q(2);
        switch (c) {
        case '0': q << 1.0, 0.0; break;
        case '1': q << 0.0, 1.0; break;
        case '+': q << h, h; break;
        default:
            throw std::invalid_argument(std::string("input label symbol '") + c + "' not in {0, 1, +}");
        }
        ComplexVector next(v.size() * 2);
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            next[2 * i] = v[i] * q[0];
            next[2 * i + 1] = v[i] * q[1];
        }
        v = std::move(next);
    }
    // Re-normalize the accumulated 1/sqrt(2) factors.
    v /= v.norm();
    return QuantumState(static_cast<int>(label.size()), std::move(v));
}

ProbabilityDistribution qft_theory(const QuantumState& input)
{
    return qsim::measurement_probabilities(qsim::apply_unitary(qsim::ideal_qft_matrix(input.n_qubits()), input));
}

SimulationResult simulate_ideal(const GateSequence& sequence, const QuantumState& input, const IonChainConfig& config,
                                std::string_view input_label)
{
    check_dimensions(sequence, input, config);
    const int n = input.n_qubits();
    ComplexVector psi = input.amplitudes();
    for (const auto& event : sequence.events()) {
        std::visit(overloaded{
                       [&](const Pulse& p) {
                           qsim::apply_single_qubit_inplace(psi, qsim::rotation_matrix(p.theta, p.phi), p.qubit, n);
                       },
                       [&](const FreeEvolution& f) {
                           psi = psi.cwiseProduct(qsim::free_evolution_phases(f.duration, config.couplings));
                       },
                       [&](const Relabel& r) {
                           psi = qsim::permute_qubits(QuantumState(n, psi), r.permutation).amplitudes();
                       },
                   },
                   event);
    }
    const QuantumState out(n, std::move(psi));
    auto probabilities = qsim::measurement_probabilities(out);
    auto theory = qft_theory(input);
    const double s = qsim::sso(probabilities, theory);
    const double d = qsim::distinguishability(probabilities, theory);
    return SimulationResult{std::string(input_label),
                            std::move(probabilities),
                            std::move(theory),
                            DensityMatrix::from_pure(out),
                            s,
                            d,
                            1,
                            0};
}

std::uint64_t derive_run_seed(std::uint64_t master_seed, std::uint64_t run_index)
{
    std::uint64_t z = master_seed + (run_index + 1) * kGoldenGamma;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

DensityMatrix simulate_noisy_run(const GateSequence& sequence, const QuantumState& input, const IonChainConfig& config,
                                 const NoiseConfig& noise, std::uint64_t run_index)
{
    check_dimensions(sequence, input, config);
    noise.validate();
    const auto phases = precompute_phases(sequence, config);
    const ComplexMatrix rho0 = input.amplitudes() * input.amplitudes().adjoint();
    return DensityMatrix(input.n_qubits(),
                         hermitize(run_trajectory(sequence, rho0, config, noise, phases, run_index)));
}

SimulationResult simulate_noisy_ensemble(const GateSequence& sequence, const QuantumState& input,
                                         const IonChainConfig& config, const NoiseConfig& noise,
                                         const EnsembleOptions& options, std::string_view input_label)
{
    check_dimensions(sequence, input, config);
    noise.validate();

    const int n = input.n_qubits();
    const auto phases = precompute_phases(sequence, config);
    const ComplexMatrix rho0 = input.amplitudes() * input.amplitudes().adjoint();
    const ProbabilityDistribution theory = qft_theory(input);
    const auto runs = static_cast<std::size_t>(noise.runs);

    unsigned workers = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, runs));

    ComplexMatrix sum = ComplexMatrix::Zero(rho0.rows(), rho0.cols());
    double sso_sum = 0.0;
    double dist_sum = 0.0;
    std::vector<ComplexMatrix> batch;

    for (std::size_t first = 0; first < runs; first += kRunsPerBatch) {
        const std::size_t count = std::min(kRunsPerBatch, runs - first);
        batch.assign(count, ComplexMatrix());

        auto work = [&](unsigned w) {
            for (std::size_t k = w; k < count; k += workers) {
                batch[k] = run_trajectory(sequence, rho0, config, noise, phases, first + k);
            }
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back(work, w);
            }
        }

        // Reduce in run-index order so the sum is independent of `workers`.
        for (std::size_t k = 0; k < count; ++k) {
            sum += batch[k];
            if (options.metric_mode == MetricMode::MeanOfRunMetrics) {
                ComplexMatrix r = hermitize(batch[k]);
                qsim::depolarize_inplace(r, noise.depolarization);
                const auto p = qsim::measurement_probabilities(DensityMatrix(n, std::move(r)));
                sso_sum += qsim::sso(p, theory);
                dist_sum += qsim::distinguishability(p, theory);
            }
        }
    }

    // Depolarization is affine, so applying it to the mean equals the mean of
    // per-run depolarized states.
    ComplexMatrix mean = hermitize(sum / static_cast<double>(runs));
    qsim::depolarize_inplace(mean, noise.depolarization);
    DensityMatrix final_density(n, std::move(mean));
    auto probabilities = qsim::measurement_probabilities(final_density);

    double s = 0.0;
    double d = 0.0;
    if (options.metric_mode == MetricMode::MeanOfRunMetrics) {
        s = sso_sum / static_cast<double>(runs);
        d = dist_sum / static_cast<double>(runs);
    } else {
        s = qsim::sso(probabilities, theory);
        d = qsim::distinguishability(probabilities, theory);
    }
    return SimulationResult{std::string(input_label),
                            std::move(probabilities),
                            theory,
                            std::move(final_density),
                            s,
                            d,
                            noise.runs,
                            noise.seed};
}

}  // namespace ionqft::ion
