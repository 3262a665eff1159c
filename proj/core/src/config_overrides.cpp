#include "ionqft/config_overrides.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

namespace ionqft {

namespace {

using json = nlohmann::json;
using Setter = std::function<void(ModelSetup&, const json&)>;

double as_number(const std::string& key, const json& v)
{
    if (!v.is_number()) {
        throw ConfigError("config key '" + key + "' expects a number");
    }
    return v.get<double>();
}

long long as_integer(const std::string& key, const json& v)
{
    if (!v.is_number_integer()) {
        throw ConfigError("config key '" + key + "' expects an integer");
    }
    return v.get<long long>();
}

template <class F>
Setter number(std::string key, F assign)
{
    return [key = std::move(key), assign](ModelSetup& s, const json& v) { assign(s, as_number(key, v)); };
}

const std::map<std::string, Setter>& setters()
{
    static const std::map<std::string, Setter> table = [] {
        std::map<std::string, Setter> t;
        auto add = [&t](const std::string& key, auto assign) { t.emplace(key, number(key, assign)); };

        for (int k = 1; k <= 3; ++k) {
            add("ion.omega_" + std::to_string(k),
                [k](ModelSetup& s, double v) { s.ion.qubit_frequencies.at(static_cast<std::size_t>(k - 1)) = v; });
        }
        for (auto [a, b] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
            add("ion.j_" + std::to_string(a) + std::to_string(b), [a, b](ModelSetup& s, double v) {
                s.ion.couplings.j(a - 1, b - 1) = v;
                s.ion.couplings.j(b - 1, a - 1) = v;
            });
        }
        add("ion.omega_rabi", [](ModelSetup& s, double v) { s.ion.omega_rabi = v; });
        add("ion.t1", [](ModelSetup& s, double v) { s.ion.t1 = v; });
        add("ion.t2", [](ModelSetup& s, double v) { s.ion.t2 = v; });
        add("ion.t3", [](ModelSetup& s, double v) { s.ion.t3 = v; });
        add("ion.area_a1", [](ModelSetup& s, double v) { s.ion.area_a1 = v; });
        add("ion.area_a2", [](ModelSetup& s, double v) { s.ion.area_a2 = v; });
        t.emplace("ion.dd_pulses_per_qubit", [](ModelSetup& s, const json& v) {
            s.ion.dd_pulses_per_qubit = static_cast<int>(as_integer("ion.dd_pulses_per_qubit", v));
        });
        t.emplace("ion.coupling_convention", [](ModelSetup& s, const json& v) {
            const std::string name = v.is_string() ? v.get<std::string>() : "";
            if (name == "pairwise_gate") {
                s.ion.couplings.convention = qsim::CouplingConvention::PairwiseGate;
            } else if (name == "ordered_pair_sum") {
                s.ion.couplings.convention = qsim::CouplingConvention::OrderedPairSum;
            } else {
                throw ConfigError("ion.coupling_convention must be \"pairwise_gate\" or \"ordered_pair_sum\"");
            }
        });

        add("noise.epsilon_max", [](ModelSetup& s, double v) { s.noise.epsilon_max = v; });
        add("noise.delta_over_omega_max", [](ModelSetup& s, double v) { s.noise.delta_over_omega_max = v; });
        add("noise.dephasing_rate", [](ModelSetup& s, double v) { s.noise.dephasing_rate = v; });
        add("noise.depolarization", [](ModelSetup& s, double v) { s.noise.depolarization = v; });
        t.emplace("noise.runs", [](ModelSetup& s, const json& v) {
            s.noise.runs = static_cast<int>(as_integer("noise.runs", v));
        });
        t.emplace("noise.seed", [](ModelSetup& s, const json& v) {
            if (!v.is_number_unsigned()) {
                throw ConfigError("config key 'noise.seed' expects a nonnegative integer");
            }
            s.noise.seed = v.get<std::uint64_t>();
        });

        add("radiometric.hbar", [](ModelSetup& s, double v) { s.constants.hbar = v; });
        add("radiometric.c", [](ModelSetup& s, double v) { s.constants.speed_of_light = v; });
        add("radiometric.dipole_cross_section", [](ModelSetup& s, double v) { s.constants.dipole_cross_section = v; });
        add("radiometric.cavity_radius", [](ModelSetup& s, double v) { s.constants.cavity_radius = v; });
        add("radiometric.i11", [](ModelSetup& s, double v) { s.constants.bessel_integral_i11 = v; });
        add("radiometric.p11_prime", [](ModelSetup& s, double v) { s.constants.bessel_root_p11 = v; });
        add("radiometric.cos_alpha", [](ModelSetup& s, double v) { s.constants.cos_alpha = v; });

        const std::pair<const char*, energy::LaserStep energy::AuxiliaryLoads::*> steps[] = {
            {"doppler", &energy::AuxiliaryLoads::doppler},
            {"sideband", &energy::AuxiliaryLoads::sideband},
            {"ground_prep", &energy::AuxiliaryLoads::ground_prep},
            {"readout", &energy::AuxiliaryLoads::readout},
        };
        for (const auto& [name, member] : steps) {
            add(std::string("loads.") + name + ".power",
                [member](ModelSetup& s, double v) { (s.loads.*member).laser_power = v; });
            add(std::string("loads.") + name + ".time",
                [member](ModelSetup& s, double v) { (s.loads.*member).duration = v; });
        }
        add("loads.repump_power", [](ModelSetup& s, double v) { s.loads.repump_power = v; });
        add("loads.trap_power", [](ModelSetup& s, double v) { s.loads.trap_power = v; });

        t.emplace("scaling.ions_per_trap", [](ModelSetup& s, const json& v) {
            s.ions_per_trap = static_cast<int>(as_integer("scaling.ions_per_trap", v));
        });
        return t;
    }();
    return table;
}

}  // namespace

void ModelSetup::validate() const
{
    try {
        ion.validate();
        noise.validate();
        constants.validate();
        loads.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid configuration: ") + e.what());
    }
    if (ions_per_trap < 1) {
        throw ConfigError("invalid configuration: scaling.ions_per_trap must be at least 1");
    }
}

std::vector<std::string> known_config_keys()
{
    std::vector<std::string> keys;
    for (const auto& [key, setter] : setters()) {
        keys.push_back(key);
    }
    return keys;
}

void apply_config_overrides(ModelSetup& setup, std::string_view json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("config must be a JSON object of dotted keys");
    }
    // Apply to a copy so a rejected file leaves `setup` untouched.
    ModelSetup updated = setup;
    const auto& table = setters();
    for (const auto& [key, value] : doc.items()) {
        const auto it = table.find(key);
        if (it == table.end()) {
            throw ConfigError("unknown config key '" + key + "'");
        }
        it->second(updated, value);
    }
    updated.validate();
    setup = std::move(updated);
}

ModelSetup load_model_setup(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    ModelSetup setup;
    apply_config_overrides(setup, buf.str());
    return setup;
}

}  // namespace ionqft
