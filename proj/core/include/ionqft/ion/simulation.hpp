#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ionqft/ion/config.hpp"
#include "ionqft/ion/sequence.hpp"
#include "ionqft/qsim/linalg.hpp"

namespace ionqft::ion {

// Stochastic and channel noise applied by simulate_noisy_ensemble. Sampling
// intervals are symmetric about zero and stored as half-widths.
struct NoiseConfig {
    // Over-rotation epsilon ~ U[-epsilon_max, epsilon_max] per pulse.
    double epsilon_max = 0.3;
    // Detuning delta = u * omega_rabi, u ~ U[-delta_over_omega_max, +...].
    double delta_over_omega_max = 0.05;
    // Dephasing rate lambda in 1/s, applied after every free evolution.
    double dephasing_rate = 62.5;
    // Depolarization weight zeta applied once to the final state.
    double depolarization = 0.25;
    int runs = 1250;
    std::uint64_t seed = 0;

    void validate() const;

    // Zero-width intervals, no channels, one run.
    static NoiseConfig noiseless();
};

enum class MetricMode {
    // Metrics of the run-averaged distribution against theory.
    AveragedDistribution,
    // Mean over runs of each run's metrics (each run depolarized).
    MeanOfRunMetrics,
};

struct EnsembleOptions {
    MetricMode metric_mode = MetricMode::AveragedDistribution;
    // Worker threads; 0 picks std::thread::hardware_concurrency(). Results
    // do not depend on this value.
    unsigned threads = 1;
};

struct SimulationResult {
    std::string input_label;
    qsim::ProbabilityDistribution probabilities;
    qsim::ProbabilityDistribution theory;
    qsim::DensityMatrix final_density;
    double sso = 0.0;
    double distinguishability = 0.0;
    int runs = 1;
    std::uint64_t seed = 0;
};

// Product state from a label over {0, 1, +}, qubit 1 first.
// Throws std::invalid_argument on an empty label or unknown symbol.
qsim::QuantumState input_state(std::string_view label);

// Ideal QFT applied to `input`, as a distribution.
qsim::ProbabilityDistribution qft_theory(const qsim::QuantumState& input);

SimulationResult simulate_ideal(const GateSequence& sequence, const qsim::QuantumState& input,
                                const IonChainConfig& config, std::string_view input_label = {});

// SplitMix64 finalizer over master_seed + (run_index + 1) * golden gamma.
// Each run's random stream depends only on (master_seed, run_index).
std::uint64_t derive_run_seed(std::uint64_t master_seed, std::uint64_t run_index);

// One Monte Carlo trajectory, without the final depolarization.
qsim::DensityMatrix simulate_noisy_run(const GateSequence& sequence, const qsim::QuantumState& input,
                                       const IonChainConfig& config, const NoiseConfig& noise,
                                       std::uint64_t run_index);

SimulationResult simulate_noisy_ensemble(const GateSequence& sequence, const qsim::QuantumState& input,
                                         const IonChainConfig& config, const NoiseConfig& noise,
                                         const EnsembleOptions& options = {}, std::string_view input_label = {});

}  // namespace ionqft::ion
