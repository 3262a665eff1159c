#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ionqft/ion/config.hpp"

namespace ionqft::ion {

// Resonant microwave pulse on one ion: R(theta, phi).
struct Pulse {
    int qubit = 1;  // 1-based
    double theta = 0.0;
    double phi = 0.0;
};

// Unperturbed evolution under the Ising couplings.
struct FreeEvolution {
    double duration = 0.0;  // s
};

// Bookkeeping permutation of qubit labels; qubit k becomes permutation[k-1].
// Costs no time and no energy.
struct Relabel {
    std::vector<int> permutation;
};

using SequenceEvent = std::variant<Pulse, FreeEvolution, Relabel>;

// Events in application order (first element acts first on the input).
class GateSequence {
public:
    GateSequence(int n_qubits, std::string label);

    // Each append validates the event against the register size.
    GateSequence& pulse(int qubit, double theta, double phi);
    GateSequence& free_evolution(double duration);
    GateSequence& relabel(std::vector<int> permutation);
    GateSequence& append(const SequenceEvent& event);

    int n_qubits() const { return n_qubits_; }
    const std::string& label() const { return label_; }
    const std::vector<SequenceEvent>& events() const { return events_; }
    std::size_t size() const { return events_.size(); }

    double total_free_evolution_time() const;
    // Sum of |theta| per qubit, indexed 0..n-1 for qubits 1..n.
    std::vector<double> pulse_area_per_qubit() const;
    std::size_t pulse_count() const;

private:
    int n_qubits_;
    std::string label_;
    std::vector<SequenceEvent> events_;
};

// Optimized three-qubit QFT: Hadamard on qubit 1 as two pulses, then the
// conditional evolutions U(T1), U(T3/2), U(T3/2) interleaved with phased
// rotations, and a final 1<->3 relabel. Global phases are dropped.
// Throws std::invalid_argument unless config.n_qubits == 3.
GateSequence build_qft_sequence(const IonChainConfig& config);

}  // namespace ionqft::ion
