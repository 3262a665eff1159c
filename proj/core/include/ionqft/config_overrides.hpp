#pragma once

// Flat JSON configuration: a single object whose keys are dotted paths and
// whose values are SI numbers, e.g.
//
//   { "ion.omega_rabi": 314159.27, "loads.trap_power": 12.5, "noise.runs": 500 }
//
// Unknown keys and wrongly typed values are rejected with ConfigError.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ionqft/energy/energy_model.hpp"
#include "ionqft/ion/config.hpp"
#include "ionqft/ion/simulation.hpp"

namespace ionqft {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ModelSetup {
    ion::IonChainConfig ion;
    ion::NoiseConfig noise;
    energy::RadiometricConstants constants;
    energy::AuxiliaryLoads loads;
    int ions_per_trap = 40;

    // Validates every section; wraps failures in ConfigError.
    void validate() const;
};

std::vector<std::string> known_config_keys();

void apply_config_overrides(ModelSetup& setup, std::string_view json_text);
ModelSetup load_model_setup(const std::filesystem::path& path);

}  // namespace ionqft
