#include <numbers>

#include <benchmark/benchmark.h>

#include "ionqft/energy/energy_model.hpp"
#include "ionqft/ion/simulation.hpp"
#include "ionqft/qsim/gates.hpp"
#include "ionqft/scaling/classical.hpp"
#include "ionqft/scaling/scaling_model.hpp"

namespace {

using namespace ionqft;

void BM_SingleQubitOnDensity(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    qsim::ComplexMatrix rho = qsim::DensityMatrix::maximally_mixed(n).matrix();
    const qsim::ComplexMatrix g = qsim::rotation_matrix(std::numbers::pi / 3, 0.4);
    for (auto _ : state) {
        qsim::apply_single_qubit_inplace(rho, g, 1, n);
        benchmark::DoNotOptimize(rho.data());
    }
}
BENCHMARK(BM_SingleQubitOnDensity)->DenseRange(3, 9, 2);

void BM_IdealSequence(benchmark::State& state)
{
    const ion::IonChainConfig config;
    const auto seq = ion::build_qft_sequence(config);
    const auto input = ion::input_state("+++");
    for (auto _ : state) {
        benchmark::DoNotOptimize(ion::simulate_ideal(seq, input, config));
    }
}
BENCHMARK(BM_IdealSequence);

void BM_NoisyEnsemble(benchmark::State& state)
{
    const ion::IonChainConfig config;
    const auto seq = ion::build_qft_sequence(config);
    const auto input = ion::input_state("+++");
    ion::NoiseConfig noise;
    noise.runs = static_cast<int>(state.range(0));
    ion::EnsembleOptions options;
    options.threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ion::simulate_noisy_ensemble(seq, input, config, noise, options));
    }
    state.SetItemsProcessed(state.iterations() * noise.runs);
}
BENCHMARK(BM_NoisyEnsemble)->Args({1250, 1})->Args({1250, 0})->Unit(benchmark::kMillisecond);

void BM_EnergyReport(benchmark::State& state)
{
    const ion::IonChainConfig config;
    const energy::AuxiliaryLoads loads;
    const energy::RadiometricConstants k;
    for (auto _ : state) {
        benchmark::DoNotOptimize(energy::energy_report(config, loads, k));
    }
}
BENCHMARK(BM_EnergyReport);

void BM_ScalingTable(benchmark::State& state)
{
    const energy::AuxiliaryLoads loads;
    const auto model = scaling::ScalingModel::calibrate(ion::IonChainConfig{}, loads, energy::RadiometricConstants{});
    const auto machines = scaling::default_machine_registry();
    for (auto _ : state) {
        benchmark::DoNotOptimize(scaling::scaling_table(1, 500, machines, model, loads));
    }
}
BENCHMARK(BM_ScalingTable)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
