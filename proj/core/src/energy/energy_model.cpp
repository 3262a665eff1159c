#include "ionqft/energy/energy_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ionqft::energy {

namespace {

void require_nonnegative(double v, const char* what)
{
    if (!(v >= 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be nonnegative");
    }
}

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be positive");
    }
}

}  // namespace

void RadiometricConstants::validate() const
{
    require_positive(hbar, "hbar");
    require_positive(speed_of_light, "speed of light");
    require_positive(dipole_cross_section, "dipole cross-section");
    require_positive(cavity_radius, "cavity radius");
    require_positive(bessel_integral_i11, "I11");
    require_positive(bessel_root_p11, "p'11");
    if (!(cos_alpha > 0.0 && cos_alpha <= 1.0)) {
        throw std::invalid_argument("cos_alpha must lie in (0, 1]");
    }
}

double AuxiliaryLoads::preparation_time() const
{
    return doppler.duration + sideband.duration + ground_prep.duration + readout.duration;
}

void AuxiliaryLoads::validate() const
{
    for (const LaserStep* s : {&doppler, &sideband, &ground_prep, &readout}) {
        require_nonnegative(s->laser_power, "laser power");
        require_nonnegative(s->duration, "step duration");
    }
    require_nonnegative(repump_power, "935 nm laser power");
    require_nonnegative(trap_power, "trap power");
}

double waveguide_cutoff(const RadiometricConstants& k)
{
    k.validate();
    return k.speed_of_light * k.bessel_root_p11 / k.cavity_radius;
}

double effective_area(double omega, const RadiometricConstants& k)
{
    k.validate();
    if (!(omega > 0.0)) {
        throw std::domain_error("microwave frequency must be positive");
    }
    const double x = k.speed_of_light * k.bessel_root_p11 / (omega * k.cavity_radius);
    if (x >= 1.0) {
        throw std::domain_error("microwave frequency is below waveguide cutoff");
    }
    const double p = k.bessel_root_p11;
    return (4.0 * k.bessel_integral_i11 / (p * p)) * std::numbers::pi * k.cavity_radius * k.cavity_radius /
           std::sqrt(1.0 - x * x);
}

double pulse_power(double omega, double omega_rabi, const RadiometricConstants& k)
{
    require_positive(omega_rabi, "Rabi frequency");
    const double area = effective_area(omega, k);
    return 0.5 * (area / k.dipole_cross_section) * k.hbar * omega_rabi * omega_rabi / (k.cos_alpha * k.cos_alpha);
}

double pulse_energy(double omega, double theta, double omega_rabi, const RadiometricConstants& k)
{
    if (!(theta >= 0.0) || !std::isfinite(theta)) {
        throw std::invalid_argument("rotation angle must be nonnegative");
    }
    // Pulse duration is theta / Omega.
    return pulse_power(omega, omega_rabi, k) * theta / omega_rabi;
}

double sequence_energy(const ion::GateSequence& sequence, const ion::IonChainConfig& config,
                       const RadiometricConstants& k)
{
    config.validate();
    if (sequence.n_qubits() != config.n_qubits) {
        throw std::invalid_argument("sequence and configuration disagree on qubit count");
    }
    double total = 0.0;
    for (const auto& e : sequence.events()) {
        if (const auto* p = std::get_if<ion::Pulse>(&e)) {
            const double omega = config.qubit_frequencies[static_cast<std::size_t>(p->qubit - 1)];
            total += pulse_energy(omega, std::abs(p->theta), config.omega_rabi, k);
        }
    }
    return total;
}

double dd_energy(const ion::IonChainConfig& config, const RadiometricConstants& k)
{
    config.validate();
    double total = 0.0;
    for (double omega : config.qubit_frequencies) {
        total += config.dd_pulses_per_qubit * pulse_energy(omega, std::numbers::pi, config.omega_rabi, k);
    }
    return total;
}

std::array<EnergyRow, 4> one_time_energy(const ion::IonChainConfig& config, const AuxiliaryLoads& loads,
                                         const RadiometricConstants& k)
{
    config.validate();
    loads.validate();
    double microwave = 0.0;
    for (double omega : config.qubit_frequencies) {
        microwave += pulse_power(omega, config.omega_rabi, k);
    }
    auto with_microwave = [&](const char* label, const LaserStep& s) {
        return EnergyRow{label, s.duration, (s.laser_power + microwave) * s.duration, std::nullopt};
    };
    auto laser_only = [](const char* label, const LaserStep& s) {
        return EnergyRow{label, s.duration, s.laser_power * s.duration, std::nullopt};
    };
    return {with_microwave("Doppler cooling", loads.doppler),
            with_microwave("Sideband cooling", loads.sideband),
            laser_only("Ground state preparation", loads.ground_prep),
            laser_only("Readout", loads.readout)};
}

BaselineEnergy baseline_energy(const AuxiliaryLoads& loads, double t_total)
{
    loads.validate();
    require_nonnegative(t_total, "total duration");
    return {loads.repump_power * t_total, loads.trap_power * t_total};
}

EnergyReport energy_report(const ion::IonChainConfig& config, const AuxiliaryLoads& loads,
                           const RadiometricConstants& k)
{
    const ion::GateSequence qft = ion::build_qft_sequence(config);
    const double t_qft = qft.total_free_evolution_time();
    const double t_total = t_qft + loads.preparation_time();

    EnergyReport report;
    report.run_duration = t_total;
    report.rows.push_back({"QFT sequence", t_qft, sequence_energy(qft, config, k), std::nullopt});
    report.rows.push_back({"Dynamical decoupling", std::nullopt, dd_energy(config, k), std::nullopt});
    for (auto& row : one_time_energy(config, loads, k)) {
        report.rows.push_back(std::move(row));
    }
    const BaselineEnergy base = baseline_energy(loads, t_total);
    report.rows.push_back({"Laser 935.2 nm", t_total, base.repump_laser, std::string(kRepumpDiscrepancyFlag)});
    report.rows.push_back({"Paul trap", t_total, base.trap, std::nullopt});

    for (const auto& row : report.rows) {
        report.total += row.energy;
    }
    return report;
}

}  // namespace ionqft::energy
