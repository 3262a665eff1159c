#pragma once

#include <vector>

#include "ionqft/qsim/gates.hpp"

namespace ionqft::ion {

// Three 171Yb+ ions in a static magnetic gradient, driven by microwaves.
// All quantities SI: angular frequencies in rad/s, times in s, angles in rad.
struct IonChainConfig {
    int n_qubits = 3;
    // Per-ion addressing frequencies.
    std::vector<double> qubit_frequencies = default_qubit_frequencies();
    qsim::IsingCouplings couplings = default_couplings();
    double omega_rabi = default_omega_rabi();

    // Conditional evolution times of the optimized sequence. t2 is carried
    // for completeness; the sequence itself only uses t1 and t3.
    double t1 = 3.69e-3;
    double t2 = 0.22e-3;
    double t3 = 4.87e-3;

    // Pulse areas of the two tuned rotations on qubit 2.
    double area_a1 = default_area_a1();
    double area_a2 = default_area_a2();

    int dd_pulses_per_qubit = 60;

    // Throws std::invalid_argument on any violated invariant.
    void validate() const;

    static std::vector<double> default_qubit_frequencies();
    static qsim::IsingCouplings default_couplings();
    static double default_omega_rabi();
    static double default_area_a1();
    static double default_area_a2();
};

// Free evolution of the chain for time t under its coupling convention.
qsim::ComplexMatrix free_evolution_operator(double t, const IonChainConfig& config);

}  // namespace ionqft::ion
