#include "ionqft/serialize.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ionqft::cli {

using json = nlohmann::ordered_json;

namespace {

json noise_json(const NoiseSummary& s)
{
    if (!s.enabled) {
        return nullptr;
    }
    const auto& n = s.noise;
    return json{
        {"epsilon_range", {-n.epsilon_max, n.epsilon_max}},
        {"delta_over_omega_range", {-n.delta_over_omega_max, n.delta_over_omega_max}},
        {"lambda_per_s", n.dephasing_rate},
        {"zeta", n.depolarization},
    };
}

json values(const qsim::ProbabilityDistribution& p)
{
    return json(std::vector<double>(p.values().begin(), p.values().end()));
}

std::string basis_label(std::size_t index, int n)
{
    std::string s(static_cast<std::size_t>(n), '0');
    for (int q = 0; q < n; ++q) {
        if ((index >> (n - 1 - q)) & 1U) {
            s[static_cast<std::size_t>(q)] = '1';
        }
    }
    return s;
}

}  // namespace

std::string format_double(double x)
{
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc()) {
        throw std::runtime_error("could not format floating-point value");
    }
    return std::string(buf.data(), end);
}

std::string simulation_json(const ion::SimulationResult& r, const NoiseSummary& noise)
{
    json j;
    j["input"] = r.input_label;
    j["noise"] = noise_json(noise);
    j["runs"] = r.runs;
    j["seed"] = r.seed;
    j["probabilities"] = values(r.probabilities);
    j["theory"] = values(r.theory);
    j["sso"] = r.sso;
    j["distinguishability"] = r.distinguishability;
    return j.dump(2) + "\n";
}

std::string simulation_csv(const ion::SimulationResult& r)
{
    std::ostringstream os;
    os << "index,basis,probability,theory\n";
    const int n = r.final_density.n_qubits();
    for (std::size_t i = 0; i < r.probabilities.size(); ++i) {
        os << i << ',' << basis_label(i, n) << ',' << format_double(r.probabilities[i]) << ','
           << format_double(r.theory[i]) << '\n';
    }
    return os.str();
}

std::string density_json(const ion::SimulationResult& r, const NoiseSummary& noise)
{
    json rows = json::array();
    const auto& m = r.final_density.matrix();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            row.push_back({m(i, k).real(), m(i, k).imag()});
        }
        rows.push_back(std::move(row));
    }
    json j;
    j["input"] = r.input_label;
    j["noise"] = noise_json(noise);
    j["runs"] = r.runs;
    j["seed"] = r.seed;
    j["density"] = std::move(rows);
    return j.dump() + "\n";
}

std::string energy_json(const energy::EnergyReport& report)
{
    json rows = json::array();
    for (const auto& row : report.rows) {
        json entry;
        entry["label"] = row.label;
        entry["duration_s"] = row.duration ? json(*row.duration) : json(nullptr);
        entry["energy_j"] = row.energy;
        entry["flag"] = row.flag ? json(*row.flag) : json(nullptr);
        rows.push_back(std::move(entry));
    }
    json j;
    j["rows"] = std::move(rows);
    j["total_j"] = report.total;
    j["run_duration_s"] = report.run_duration;
    return j.dump(2) + "\n";
}

std::string energy_csv(const energy::EnergyReport& report)
{
    std::ostringstream os;
    os << "label,duration_s,energy_j,flag\n";
    for (const auto& row : report.rows) {
        os << row.label << ',' << (row.duration ? format_double(*row.duration) : "") << ','
           << format_double(row.energy) << ',' << row.flag.value_or("") << '\n';
    }
    os << "Total," << format_double(report.run_duration) << ',' << format_double(report.total) << ",\n";
    return os.str();
}

std::string energy_table(const energy::EnergyReport& report)
{
    std::ostringstream os;
    char line[160];
    std::snprintf(line, sizeof line, "%-26s %14s %16s\n", "Item", "Duration (ms)", "Energy (uJ)");
    os << line;
    auto emit = [&](const std::string& label, std::optional<double> duration, double energy, const char* note) {
        const std::string d = duration ? [&] {
            char b[32];
            std::snprintf(b, sizeof b, "%.2f", *duration * 1e3);
            return std::string(b);
        }()
                                       : std::string("-");
        std::snprintf(line, sizeof line, "%-26s %14s %16.4g%s\n", label.c_str(), d.c_str(), energy * 1e6, note);
        os << line;
    };
    for (const auto& row : report.rows) {
        emit(row.label, row.duration, row.energy, row.flag ? "  *" : "");
    }
    emit("Total", report.run_duration, report.total, "");
    for (const auto& row : report.rows) {
        if (row.flag) {
            os << "* " << row.label << ": " << *row.flag << '\n';
        }
    }
    return os.str();
}

std::string machine_column(const std::string& name)
{
    std::string s;
    for (char c : name) {
        const auto u = static_cast<unsigned char>(c);
        s += std::isalnum(u) ? static_cast<char>(std::tolower(u)) : '_';
    }
    return s;
}

std::string scaling_csv(const std::vector<scaling::ScalingRow>& rows,
                        const std::vector<scaling::ClassicalMachine>& machines)
{
    std::ostringstream os;
    os << "n,e_qft_j,e_dd_j,e_onetime_j,e_baseline_j,e_total_j";
    for (const auto& m : machines) {
        os << ",e_" << machine_column(m.name) << "_j";
    }
    os << '\n';
    for (const auto& r : rows) {
        os << r.n << ',' << format_double(r.quantum.qft) << ',' << format_double(r.quantum.dd) << ','
           << format_double(r.quantum.one_time) << ',' << format_double(r.quantum.baseline) << ','
           << format_double(r.quantum.total);
        for (double c : r.classical) {
            os << ',' << format_double(c);
        }
        os << '\n';
    }
    return os.str();
}

std::string crossover_json(const std::vector<scaling::ClassicalMachine>& machines,
                           const std::vector<std::optional<int>>& crossover)
{
    // nlohmann::json (not ordered_json) keeps object keys sorted.
    nlohmann::json j = nlohmann::json::object();
    for (std::size_t i = 0; i < machines.size(); ++i) {
        j[machines[i].name] = crossover[i] ? nlohmann::json(*crossover[i]) : nlohmann::json(nullptr);
    }
    return j.dump(2) + "\n";
}

}  // namespace ionqft::cli
