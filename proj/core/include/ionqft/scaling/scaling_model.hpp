#pragma once

// Extrapolation of the three-qubit energy ledger to an n-qubit register.
//
//   gates      n^2 E_pi + n E_H            (phase gates are free)
//   DD         c_dd n^2 E_pi               (c_dd = 20 reproduces 180 pulses at n = 3)
//   one-time   sum_{cooling} (P369 + n P_mw) t  +  sum_{prep, readout} P369 t
//   baseline   (P935 + ceil(n / ions_per_trap) P_trap) (a n + t_prep)

#include "ionqft/energy/energy_model.hpp"
#include "ionqft/ion/config.hpp"

namespace ionqft::scaling {

struct ScalingModel {
    double pi_pulse_energy = 0.0;          // J, E(omega_mean, pi)
    double hadamard_energy = 0.0;          // J, E(pi/2) + E(pi)
    double time_per_qubit = 0.0;           // s, QFT duration grows as a * n
    double preparation_time = 0.0;         // s, one-time steps
    double dd_pulses_coefficient = 20.0;   // total DD pulses = coefficient * n^2
    int ions_per_trap = 40;
    double microwave_power_per_qubit = 0.0;  // W

    void validate() const;

    // Anchors every parameter at the reference three-qubit setup: pulse
    // energies at the mean addressing frequency, a = t_QFT(3) / 3, and the
    // DD coefficient N_DD / 3 so that 3 qubits reproduce 3 N_DD pulses.
    static ScalingModel calibrate(const ion::IonChainConfig& config, const energy::AuxiliaryLoads& loads,
                                  const energy::RadiometricConstants& k, int ions_per_trap = 40);

    int trap_count(int n) const;
    double qft_duration(int n) const { return time_per_qubit * n; }
};

struct QuantumEnergy {
    double qft = 0.0;
    double dd = 0.0;
    double one_time = 0.0;
    double baseline = 0.0;
    double total = 0.0;
};

// All of these throw std::invalid_argument for n < 1.
double qft_gate_energy_n(int n, const ScalingModel& model);
double dd_energy_n(int n, const ScalingModel& model);
double one_time_energy_n(int n, const ScalingModel& model, const energy::AuxiliaryLoads& loads);
double baseline_energy_n(int n, const ScalingModel& model, const energy::AuxiliaryLoads& loads);
QuantumEnergy quantum_energy_n(int n, const ScalingModel& model, const energy::AuxiliaryLoads& loads);
double total_quantum_energy_n(int n, const ScalingModel& model, const energy::AuxiliaryLoads& loads);

}  // namespace ionqft::scaling
