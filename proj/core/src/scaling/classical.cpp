#include "ionqft/scaling/classical.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ionqft::scaling {

void ClassicalMachine::validate() const
{
    if (name.empty()) {
        throw std::invalid_argument("machine needs a name");
    }
    if (!power_watts && !flops_per_watt) {
        throw std::invalid_argument("machine '" + name + "' has neither power nor efficiency");
    }
    if (power_watts && flops_per_watt) {
        throw std::invalid_argument("machine '" + name + "' sets both power and efficiency");
    }
    if (power_watts && (!(*power_watts > 0.0) || !(peak_flops > 0.0))) {
        throw std::invalid_argument("machine '" + name + "' needs positive power and peak performance");
    }
    if (flops_per_watt && !(*flops_per_watt > 0.0)) {
        throw std::invalid_argument("machine '" + name + "' needs positive efficiency");
    }
    if (!(bitops_per_flop > 0.0)) {
        throw std::invalid_argument("machine '" + name + "' needs positive bit operations per flop");
    }
}

double classical_bitop_cost(const ClassicalMachine& machine)
{
    machine.validate();
    if (machine.power_watts) {
        return *machine.power_watts / (machine.peak_flops * machine.bitops_per_flop);
    }
    return 1.0 / (*machine.flops_per_watt * machine.bitops_per_flop);
}

double classical_energy_n(int n, const ClassicalMachine& machine)
{
    if (n < 1 || n > kMaxClassicalBits) {
        throw std::invalid_argument("classical problem size outside [1, " + std::to_string(kMaxClassicalBits) + "]");
    }
    // n * 2^n, exact in double up to n ~ 1000.
    return std::ldexp(static_cast<double>(n), n) * classical_bitop_cost(machine);
}

std::optional<int> find_crossover(const ClassicalMachine& machine, const ScalingModel& model,
                                  const energy::AuxiliaryLoads& loads, int n_max)
{
    if (n_max < 2) {
        throw std::invalid_argument("crossover search needs n_max >= 2");
    }
    for (int n = 2; n <= n_max; ++n) {
        if (total_quantum_energy_n(n, model, loads) < classical_energy_n(n, machine)) {
            return n;
        }
    }
    return std::nullopt;
}

std::vector<ScalingRow> scaling_table(int n_min, int n_max, const std::vector<ClassicalMachine>& machines,
                                      const ScalingModel& model, const energy::AuxiliaryLoads& loads)
{
    if (n_min < 1 || n_max < n_min) {
        throw std::invalid_argument("scaling range must satisfy 1 <= n_min <= n_max");
    }
    std::vector<ScalingRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max - n_min + 1));
    for (int n = n_min; n <= n_max; ++n) {
        ScalingRow row;
        row.n = n;
        row.quantum = quantum_energy_n(n, model, loads);
        row.classical.reserve(machines.size());
        for (const auto& m : machines) {
            row.classical.push_back(classical_energy_n(n, m));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ClassicalMachine> default_machine_registry()
{
    ClassicalMachine frontier;
    frontier.name = "Frontier";
    frontier.peak_flops = 1194.00e15;
    frontier.power_watts = 22703e3;

    ClassicalMachine henri;
    henri.name = "Henri";
    henri.peak_flops = 2.88e15;
    henri.flops_per_watt = 65.396e9;

    return {frontier, henri};
}

std::vector<ClassicalMachine> parse_machine_registry(std::string_view json_text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw RegistryError(std::string("machine registry is not valid JSON: ") + e.what());
    }
    if (!doc.is_array() || doc.empty()) {
        throw RegistryError("machine registry must be a nonempty JSON array");
    }

    static const std::set<std::string> known{"name", "peak_flops", "power_watts", "flops_per_watt",
                                             "bitops_per_flop"};
    auto number = [](const nlohmann::json& entry, const char* key) {
        const auto& v = entry.at(key);
        if (!v.is_number()) {
            throw RegistryError(std::string("registry field '") + key + "' must be a number");
        }
        return v.get<double>();
    };

    std::vector<ClassicalMachine> machines;
    std::set<std::string> names;
    for (const auto& entry : doc) {
        if (!entry.is_object()) {
            throw RegistryError("registry entries must be objects");
        }
        for (const auto& [key, value] : entry.items()) {
            if (!known.contains(key)) {
                throw RegistryError("unknown registry field '" + key + "'");
            }
        }
        if (!entry.contains("name") || !entry["name"].is_string()) {
            throw RegistryError("registry entry needs a string 'name'");
        }
        ClassicalMachine m;
        m.name = entry["name"].get<std::string>();
        if (entry.contains("peak_flops")) {
            m.peak_flops = number(entry, "peak_flops");
        }
        if (entry.contains("power_watts")) {
            m.power_watts = number(entry, "power_watts");
        }
        if (entry.contains("flops_per_watt")) {
            m.flops_per_watt = number(entry, "flops_per_watt");
        }
        if (entry.contains("bitops_per_flop")) {
            m.bitops_per_flop = number(entry, "bitops_per_flop");
        }
        try {
            m.validate();
        } catch (const std::invalid_argument& e) {
            throw RegistryError(e.what());
        }
        if (!names.insert(m.name).second) {
            throw RegistryError("duplicate machine name '" + m.name + "'");
        }
        machines.push_back(std::move(m));
    }
    return machines;
}

std::vector<ClassicalMachine> load_machine_registry(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw RegistryError("cannot open machine registry '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_machine_registry(buf.str());
}

}  // namespace ionqft::scaling
