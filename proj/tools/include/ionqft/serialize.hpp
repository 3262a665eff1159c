#pragma once

#include <string>
#include <vector>

#include "ionqft/energy/energy_model.hpp"
#include "ionqft/ion/simulation.hpp"
#include "ionqft/scaling/classical.hpp"

namespace ionqft::cli {

// Shortest decimal that parses back to exactly `x`.
std::string format_double(double x);

// Noise block of the JSON output; null when the run was noiseless.
struct NoiseSummary {
    bool enabled = false;
    ion::NoiseConfig noise;
};

std::string simulation_json(const ion::SimulationResult& result, const NoiseSummary& noise);
// index,basis,probability,theory
std::string simulation_csv(const ion::SimulationResult& result);
std::string density_json(const ion::SimulationResult& result, const NoiseSummary& noise);

std::string energy_json(const energy::EnergyReport& report);
// label,duration_s,energy_j,flag; last row is the total.
std::string energy_csv(const energy::EnergyReport& report);
// Fixed-width text in uJ and ms.
std::string energy_table(const energy::EnergyReport& report);

// Lowercase, with every character outside [a-z0-9] replaced by '_'.
std::string machine_column(const std::string& name);
std::string scaling_csv(const std::vector<scaling::ScalingRow>& rows,
                        const std::vector<scaling::ClassicalMachine>& machines);

std::string crossover_json(const std::vector<scaling::ClassicalMachine>& machines,
                           const std::vector<std::optional<int>>& crossover);

}  // namespace ionqft::cli
