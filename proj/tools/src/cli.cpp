#include "ionqft/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "ionqft/config_overrides.hpp"
#include "ionqft/energy/energy_model.hpp"
#include "ionqft/ion/sequence.hpp"
#include "ionqft/ion/simulation.hpp"
#include "ionqft/scaling/classical.hpp"
#include "ionqft/scaling/scaling_model.hpp"
#include "ionqft/serialize.hpp"

namespace ionqft::cli {

namespace {

// Usage problems that only show up after parsing (bad label, bad range).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OutputOptions {
    std::string path;
    bool to_stdout = false;
};

void add_output_options(CLI::App& cmd, OutputOptions& o)
{
    auto* out = cmd.add_option("--out", o.path, "Write the artifact to this file");
    auto* std_out = cmd.add_flag("--stdout", o.to_stdout, "Write the artifact to standard output (default)");
    out->excludes(std_out);
    std_out->excludes(out);
}

void emit(const OutputOptions& o, const std::string& text, std::ostream& out)
{
    if (o.path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open '" + o.path + "' for writing");
    }
    file << text;
    if (!file.flush()) {
        throw std::runtime_error("failed writing '" + o.path + "'");
    }
}

ModelSetup load_setup(const std::string& config_path)
{
    return config_path.empty() ? ModelSetup{} : load_model_setup(config_path);
}

std::vector<scaling::ClassicalMachine> load_machines(const std::string& path)
{
    return path.empty() ? scaling::default_machine_registry() : scaling::load_machine_registry(path);
}

struct SimulateOptions {
    std::string input = "+++";
    std::string noise = "off";
    int runs = 0;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string metric = "averaged";
    unsigned threads = 0;
    std::string config;
    OutputOptions output;
    CLI::Option* runs_opt = nullptr;
    CLI::Option* seed_opt = nullptr;
};

void add_simulation_options(CLI::App& cmd, SimulateOptions& o)
{
    cmd.add_option("--input", o.input, "Input product state over {0, 1, +}, qubit 1 first")->capture_default_str();
    cmd.add_option("--noise", o.noise, "Stochastic pulse errors and decoherence")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
    o.runs_opt = cmd.add_option("--runs", o.runs, "Monte Carlo runs (noise on)")->check(CLI::PositiveNumber);
    o.seed_opt = cmd.add_option("--seed", o.seed, "Master seed (noise on)");
    cmd.add_option("--threads", o.threads, "Worker threads, 0 = all cores; output does not depend on it")
        ->capture_default_str();
    cmd.add_option("--config", o.config, "Flat JSON configuration file")->check(CLI::ExistingFile);
    add_output_options(cmd, o.output);
}

ion::SimulationResult run_simulation(const SimulateOptions& o, ion::NoiseConfig& noise_used)
{
    if (o.input.size() != 3) {
        throw UsageError("--input must name exactly 3 qubits, got '" + o.input + "'");
    }
    qsim::QuantumState input = [&] {
        try {
            return ion::input_state(o.input);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    ModelSetup setup = load_setup(o.config);
    if (*o.runs_opt) {
        setup.noise.runs = o.runs;
    }
    if (*o.seed_opt) {
        setup.noise.seed = o.seed;
    }
    noise_used = setup.noise;
    const auto sequence = ion::build_qft_sequence(setup.ion);
    if (o.noise == "off") {
        auto r = ion::simulate_ideal(sequence, input, setup.ion, o.input);
        r.seed = setup.noise.seed;
        return r;
    }
    ion::EnsembleOptions ensemble;
    ensemble.threads = o.threads;
    ensemble.metric_mode =
        o.metric == "mean-of-runs" ? ion::MetricMode::MeanOfRunMetrics : ion::MetricMode::AveragedDistribution;
    return ion::simulate_noisy_ensemble(sequence, input, setup.ion, setup.noise, ensemble, o.input);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fidelity and energy model of a three-ion microwave QFT", "ionqft"};
    app.require_subcommand(1, 1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    SimulateOptions sim;
    auto* simulate = app.add_subcommand("simulate", "Run the QFT sequence and compare with the ideal QFT");
    add_simulation_options(*simulate, sim);
    simulate->add_option("--format", sim.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    simulate->add_option("--metric", sim.metric, "Overlap of the averaged distribution, or mean of per-run overlaps")
        ->check(CLI::IsMember({"averaged", "mean-of-runs"}))
        ->capture_default_str();

    SimulateOptions dens;
    auto* density = app.add_subcommand("density", "Write the final density matrix as [re, im] pairs");
    add_simulation_options(*density, dens);

    std::string energy_format = "json";
    std::string energy_config;
    OutputOptions energy_out;
    auto* energy_cmd = app.add_subcommand("energy", "Energy ledger of one QFT run");
    energy_cmd->add_option("--format", energy_format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    energy_cmd->add_option("--config", energy_config, "Flat JSON configuration file")->check(CLI::ExistingFile);
    add_output_options(*energy_cmd, energy_out);

    int n_min = 1;
    int n_max = 100;
    std::string scaling_machines;
    std::string scaling_config;
    OutputOptions scaling_out;
    auto* scaling_cmd = app.add_subcommand("scaling", "Quantum and classical energy against register size (CSV)");
    scaling_cmd->add_option("--n-min", n_min, "Smallest register size")->capture_default_str();
    scaling_cmd->add_option("--n-max", n_max, "Largest register size, at most 500")->capture_default_str();
    scaling_cmd->add_option("--machines", scaling_machines, "Machine registry JSON")->check(CLI::ExistingFile);
    scaling_cmd->add_option("--config", scaling_config, "Flat JSON configuration file")->check(CLI::ExistingFile);
    add_output_options(*scaling_cmd, scaling_out);

    int crossover_n_max = 500;
    std::string crossover_machines;
    std::string crossover_config;
    OutputOptions crossover_out;
    auto* crossover_cmd = app.add_subcommand("crossover", "Smallest register size where the quantum run is cheaper");
    crossover_cmd->add_option("--n-max", crossover_n_max, "Search limit, at most 1000")->capture_default_str();
    crossover_cmd->add_option("--machines", crossover_machines, "Machine registry JSON")->check(CLI::ExistingFile);
    crossover_cmd->add_option("--config", crossover_config, "Flat JSON configuration file")->check(CLI::ExistingFile);
    add_output_options(*crossover_cmd, crossover_out);

    try {
        // CLI11 consumes a reversed argument list.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "ionqft: " << e.what() << "\n";
        return kExitUsageError;
    }

    try {
        if (*simulate) {
            ion::NoiseConfig noise;
            const auto r = run_simulation(sim, noise);
            const NoiseSummary summary{sim.noise == "on", noise};
            emit(sim.output, sim.format == "csv" ? simulation_csv(r) : simulation_json(r, summary), out);
        } else if (*density) {
            ion::NoiseConfig noise;
            const auto r = run_simulation(dens, noise);
            emit(dens.output, density_json(r, NoiseSummary{dens.noise == "on", noise}), out);
        } else if (*energy_cmd) {
            const ModelSetup setup = load_setup(energy_config);
            const auto report = energy::energy_report(setup.ion, setup.loads, setup.constants);
            const std::string text = energy_format == "csv"     ? energy_csv(report)
                                     : energy_format == "table" ? energy_table(report)
                                                                : energy_json(report);
            emit(energy_out, text, out);
        } else if (*scaling_cmd) {
            if (n_min < 1 || n_max < n_min || n_max > 500) {
                throw UsageError("need 1 <= --n-min <= --n-max <= 500");
            }
            const ModelSetup setup = load_setup(scaling_config);
            const auto machines = load_machines(scaling_machines);
            const auto model = scaling::ScalingModel::calibrate(setup.ion, setup.loads, setup.constants,
                                                                setup.ions_per_trap);
            emit(scaling_out, scaling_csv(scaling::scaling_table(n_min, n_max, machines, model, setup.loads), machines),
                 out);
        } else if (*crossover_cmd) {
            if (crossover_n_max < 2 || crossover_n_max > scaling::kMaxClassicalBits) {
                throw UsageError("need 2 <= --n-max <= 1000");
            }
            const ModelSetup setup = load_setup(crossover_config);
            const auto machines = load_machines(crossover_machines);
            const auto model = scaling::ScalingModel::calibrate(setup.ion, setup.loads, setup.constants,
                                                                setup.ions_per_trap);
            std::vector<std::optional<int>> result;
            for (const auto& m : machines) {
                result.push_back(scaling::find_crossover(m, model, setup.loads, crossover_n_max));
            }
            emit(crossover_out, crossover_json(machines, result), out);
        }
    } catch (const UsageError& e) {
        err << "ionqft: " << e.what() << "\n";
        return kExitUsageError;
    } catch (const ConfigError& e) {
        err << "ionqft: " << e.what() << "\n";
        return kExitUsageError;
    } catch (const scaling::RegistryError& e) {
        err << "ionqft: " << e.what() << "\n";
        return kExitUsageError;
    } catch (const std::exception& e) {
        err << "ionqft: " << e.what() << "\n";
        return kExitRuntimeError;
    }
    return kExitOk;
}

}  // namespace ionqft::cli
