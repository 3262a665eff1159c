#include "ionqft/ion/sequence.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ionqft::ion {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

GateSequence::GateSequence(int n_qubits, std::string label) : n_qubits_(n_qubits), label_(std::move(label))
{
    if (n_qubits < 1 || n_qubits > qsim::kMaxQubits) {
        throw std::invalid_argument("sequence qubit count out of range");
    }
}

GateSequence& GateSequence::pulse(int qubit, double theta, double phi)
{
    return append(Pulse{qubit, theta, phi});
}

GateSequence& GateSequence::free_evolution(double duration)
{
    return append(FreeEvolution{duration});
}

GateSequence& GateSequence::relabel(std::vector<int> permutation)
{
    return append(Relabel{std::move(permutation)});
}

GateSequence& GateSequence::append(const SequenceEvent& event)
{
    std::visit(overloaded{
                   [&](const Pulse& p) {
                       if (p.qubit < 1 || p.qubit > n_qubits_) {
                           throw std::out_of_range("pulse addresses a qubit outside the register");
                       }
                       if (!std::isfinite(p.theta) || !std::isfinite(p.phi)) {
                           throw std::invalid_argument("pulse angles must be finite");
                       }
                   },
                   [&](const FreeEvolution& f) {
                       if (!(f.duration >= 0.0) || !std::isfinite(f.duration)) {
                           throw std::invalid_argument("free evolution duration must be nonnegative");
                       }
                   },
                   [&](const Relabel& r) {
                       if (static_cast<int>(r.permutation.size()) != n_qubits_) {
                           throw std::invalid_argument("relabel permutation has wrong length");
                       }
                       std::vector<bool> seen(r.permutation.size(), false);
                       for (int q : r.permutation) {
                           if (q < 1 || q > n_qubits_ || seen[static_cast<std::size_t>(q - 1)]) {
                               throw std::invalid_argument("relabel is not a bijection");
                           }
                           seen[static_cast<std::size_t>(q - 1)] = true;
                       }
                   },
               },
               event);
    events_.push_back(event);
    return *this;
}

double GateSequence::total_free_evolution_time() const
{
    double total = 0.0;
    for (const auto& e : events_) {
        if (const auto* f = std::get_if<FreeEvolution>(&e)) {
            total += f->duration;
        }
    }
    return total;
}

std::vector<double> GateSequence::pulse_area_per_qubit() const
{
    std::vector<double> area(static_cast<std::size_t>(n_qubits_), 0.0);
    for (const auto& e : events_) {
        if (const auto* p = std::get_if<Pulse>(&e)) {
            area[static_cast<std::size_t>(p->qubit - 1)] += std::abs(p->theta);
        }
    }
    return area;
}

std::size_t GateSequence::pulse_count() const
{
    std::size_t count = 0;
    for (const auto& e : events_) {
        count += std::holds_alternative<Pulse>(e) ? 1 : 0;
    }
    return count;
}

GateSequence build_qft_sequence(const IonChainConfig& config)
{
    using std::numbers::pi;
    config.validate();
    if (config.n_qubits != 3) {
        throw std::invalid_argument("the optimized QFT sequence exists for 3 qubits only");
    }

    GateSequence seq(3, "qft3-optimized");
    // H_1 = i R(pi/2, -pi/2) R(pi, 0); R(pi, 0) acts first.
    seq.pulse(1, pi, 0.0)
        .pulse(1, pi / 2.0, -pi / 2.0)
        .free_evolution(config.t1)
        .pulse(3, pi, 13.0 * pi / 16.0)
        .pulse(2, pi, 0.0)
        .pulse(2, config.area_a1, 3.0 * pi / 4.0)
        .free_evolution(config.t3 / 2.0)
        .pulse(1, pi, pi / 2.0)
        .free_evolution(config.t3 / 2.0)
        .pulse(1, pi, 27.0 * pi / 16.0)
        .pulse(3, pi / 2.0, 3.0 * pi / 2.0)
        .pulse(2, config.area_a2, 3.0 * pi / 4.0)
        .relabel({3, 2, 1});
    return seq;
}

}  // namespace ionqft::ion
