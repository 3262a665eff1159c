#include "ionqft/scaling/scaling_model.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ionqft/ion/sequence.hpp"

namespace ionqft::scaling {

namespace {

void check_n(int n)
{
    if (n < 1) {
        throw std::invalid_argument("qubit count must be at least 1, got " + std::to_string(n));
    }
}

}  // namespace

void ScalingModel::validate() const
{
    for (double v : {pi_pulse_energy, hadamard_energy, time_per_qubit, preparation_time, dd_pulses_coefficient,
                     microwave_power_per_qubit}) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument("scaling model parameters must be positive");
        }
    }
    if (ions_per_trap < 1) {
        throw std::invalid_argument("ions per trap must be at least 1");
    }
}

ScalingModel ScalingModel::calibrate(const ion::IonChainConfig& config, const energy::AuxiliaryLoads& loads,
                                     const energy::RadiometricConstants& k, int ions_per_trap)
{
    using std::numbers::pi;
    config.validate();
    loads.validate();
    const double mean_omega =
        std::accumulate(config.qubit_frequencies.begin(), config.qubit_frequencies.end(), 0.0) /
        static_cast<double>(config.qubit_frequencies.size());

    ScalingModel m;
    m.pi_pulse_energy = energy::pulse_energy(mean_omega, pi, config.omega_rabi, k);
    m.hadamard_energy = energy::pulse_energy(mean_omega, pi / 2.0, config.omega_rabi, k) + m.pi_pulse_energy;
    m.time_per_qubit = ion::build_qft_sequence(config).total_free_evolution_time() / config.n_qubits;
    m.preparation_time = loads.preparation_time();
    m.dd_pulses_coefficient = static_cast<double>(config.dd_pulses_per_qubit) / config.n_qubits;
    m.ions_per_trap = ions_per_trap;
    m.microwave_power_per_qubit = energy::pulse_power(mean_omega, config.omega_rabi, k);
    m.validate();
    return m;
}

int ScalingModel::trap_count(int n) const
{
    check_n(n);
    return (n + ions_per_trap - 1) / ions_per_trap;
}

double qft_gate_energy_n(int n, const ScalingModel& model)
{
    check_n(n);
    const double nn = n;
    return nn * nn * model.pi_pulse_energy + nn * model.hadamard_energy;
}

double dd_energy_n(int n, const ScalingModel& model)
{
    check_n(n);
    const double nn = n;
    return model.dd_pulses_coefficient * nn * nn * model.pi_pulse_energy;
}

double one_time_energy_n(int n, const ScalingModel& model, const energy::AuxiliaryLoads& loads)
{
    check_n(n);
    const double microwave = n * model.microwave_power_per_qubit;
    return (loads.doppler.laser_power + microwave) * loads.doppler.duration +
           (loads.sideband.laser_power + microwave) * loads.sideband.duration +
           loads.ground_prep.laser_power * loads.ground_prep.duration +
           loads.readout.laser_power * loads.readout.duration;
}

double baseline_energy_n(int n, const ScalingModel& model, const energy::AuxiliaryLoads& loads)
{
    check_n(n);
    const double power = loads.repump_power + model.trap_count(n) * loads.trap_power;
    return power * (model.qft_duration(n) + model.preparation_time);
}

QuantumEnergy quantum_energy_n(int n, const ScalingModel& model, const energy::AuxiliaryLoads& loads)
{
    QuantumEnergy e;
    e.qft = qft_gate_energy_n(n, model);
    e.dd = dd_energy_n(n, model);
    e.one_time = one_time_energy_n(n, model, loads);
    e.baseline = baseline_energy_n(n, model, loads);
    e.total = e.qft + e.dd + e.one_time + e.baseline;
    return e;
}

double total_quantum_energy_n(int n, const ScalingModel& model, const energy::AuxiliaryLoads& loads)
{
    return quantum_energy_n(n, model, loads).total;
}

}  // namespace ionqft::scaling
