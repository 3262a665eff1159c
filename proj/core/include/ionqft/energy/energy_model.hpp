#pragma once

// Energy ledger for one QFT run: microwave pulse energy, dynamical
// decoupling, one-time cooling/preparation/readout steps and the continuous
// baseline loads. Everything is SI (J, W, s, rad/s, m); conversion to uJ/ms
// happens only when a report is printed.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ionqft/ion/config.hpp"
#include "ionqft/ion/sequence.hpp"

namespace ionqft::energy {

struct RadiometricConstants {
    double hbar = 1.054571817e-34;        // J s
    double speed_of_light = 2.99792458e8;  // m/s
    double dipole_cross_section = 3.4e-27; // m^2 (0.0034 pm^2)
    double cavity_radius = 8.15e-3;        // m, half of the 16.3 mm diameter
    double bessel_integral_i11 = 0.405;
    double bessel_root_p11 = 1.8412;  // first zero of J1'
    double cos_alpha = 1.0;           // field/moment alignment, (0, 1]

    void validate() const;
};

struct LaserStep {
    double laser_power = 0.0;  // W, 369.5 nm
    double duration = 0.0;     // s
};

struct AuxiliaryLoads {
    LaserStep doppler{48e-6, 8.0e-3};
    LaserStep sideband{0.16e-6, 60e-3};
    LaserStep ground_prep{35.0e-6, 0.20e-3};
    LaserStep readout{48.0e-6, 3.0e-3};
    double repump_power = 1.35e-3;  // W, 935.2 nm, on for the whole run
    double trap_power = 10.0;       // W, Paul trap supply

    // Sum of the four one-time step durations.
    double preparation_time() const;
    void validate() const;
};

struct EnergyRow {
    std::string label;
    std::optional<double> duration;  // s
    double energy = 0.0;             // J
    // Set when the computed row is known to disagree with the reference ledger.
    std::optional<std::string> flag;
};

struct EnergyReport {
    std::vector<EnergyRow> rows;  // items only; the total is separate
    double total = 0.0;
    double run_duration = 0.0;  // s
};

// Reference value for the 935 nm row of the reference energy ledger (J). The
// formula P935 * t_total gives ~1.08e-4 J, about 6.9x less.
inline constexpr double kReferenceRepumpEnergy = 7.40e-4;
inline constexpr const char* kRepumpDiscrepancyFlag = "formula_differs_from_reference_ledger";

// Lowest angular frequency the circular cavity supports: c p'11 / a.
double waveguide_cutoff(const RadiometricConstants& k);

// A_rad = (4 I11 / p'11^2) pi a^2 / sqrt(1 - x^2), x = c p'11 / (omega a).
// Throws std::domain_error at or below the cutoff.
double effective_area(double omega, const RadiometricConstants& k);

// P = 1/2 (A_rad / A_dip) hbar Omega^2 / cos^2(alpha)
double pulse_power(double omega, double omega_rabi, const RadiometricConstants& k);

// E = P * theta / Omega. Throws std::invalid_argument for theta < 0.
double pulse_energy(double omega, double theta, double omega_rabi, const RadiometricConstants& k);

// Sum of pulse energies; free evolutions and relabels are free.
double sequence_energy(const ion::GateSequence& sequence, const ion::IonChainConfig& config,
                       const RadiometricConstants& k);

// N_DD pi pulses on every qubit.
double dd_energy(const ion::IonChainConfig& config, const RadiometricConstants& k);

// Doppler and sideband cooling pay the laser plus one microwave tone per
// qubit; ground-state preparation and readout are laser-only.
std::array<EnergyRow, 4> one_time_energy(const ion::IonChainConfig& config, const AuxiliaryLoads& loads,
                                         const RadiometricConstants& k);

struct BaselineEnergy {
    double repump_laser = 0.0;  // J
    double trap = 0.0;          // J
};

BaselineEnergy baseline_energy(const AuxiliaryLoads& loads, double t_total);

// Rows in ledger order: QFT sequence, dynamical decoupling, Doppler cooling,
// sideband cooling, ground-state preparation, readout, 935 nm laser, Paul
// trap. total == sum of rows.
EnergyReport energy_report(const ion::IonChainConfig& config, const AuxiliaryLoads& loads,
                           const RadiometricConstants& k);

}  // namespace ionqft::energy
