#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ionqft/scaling/scaling_model.hpp"

namespace ionqft::scaling {

// A classical machine computing the FFT. Exactly one of power_watts and
// flops_per_watt must be set.
struct ClassicalMachine {
    std::string name;
    double peak_flops = 0.0;
    std::optional<double> power_watts;
    std::optional<double> flops_per_watt;
    double bitops_per_flop = 1000.0;

    void validate() const;
};

// Joules per single-bit operation: power / (peak * bitops_per_flop), or
// 1 / (flops_per_watt * bitops_per_flop).
double classical_bitop_cost(const ClassicalMachine& machine);

// FFT on n bits: n 2^n bit operations. Valid for 1 <= n <= kMaxClassicalBits.
inline constexpr int kMaxClassicalBits = 1000;
double classical_energy_n(int n, const ClassicalMachine& machine);

// Smallest n in [2, n_max] where the quantum total undercuts the machine.
std::optional<int> find_crossover(const ClassicalMachine& machine, const ScalingModel& model,
                                  const energy::AuxiliaryLoads& loads, int n_max = 500);

struct ScalingRow {
    int n = 0;
    QuantumEnergy quantum;
    std::vector<double> classical;  // one per machine, same order
};

// Throws std::invalid_argument unless 1 <= n_min <= n_max.
std::vector<ScalingRow> scaling_table(int n_min, int n_max, const std::vector<ClassicalMachine>& machines,
                                      const ScalingModel& model, const energy::AuxiliaryLoads& loads);

// Frontier and Henri as listed in April 2024.
std::vector<ClassicalMachine> default_machine_registry();

// JSON array of {name, peak_flops, power_watts | flops_per_watt,
// bitops_per_flop?}. Throws RegistryError on malformed input.
class RegistryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<ClassicalMachine> parse_machine_registry(std::string_view json_text);
std::vector<ClassicalMachine> load_machine_registry(const std::string& path);

}  // namespace ionqft::scaling
