#include "ionqft/ion/config.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ionqft::ion {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

std::vector<double> IonChainConfig::default_qubit_frequencies()
{
    return {kTwoPi * 12.645e9, kTwoPi * 12.648e9, kTwoPi * 12.651e9};
}

qsim::IsingCouplings IonChainConfig::default_couplings()
{
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(3, 3);
    j(0, 1) = j(1, 0) = kTwoPi * 34.0;
    j(1, 2) = j(2, 1) = kTwoPi * 39.0;
    j(0, 2) = j(2, 0) = kTwoPi * 27.0;
    return {j, qsim::CouplingConvention::PairwiseGate};
}

double IonChainConfig::default_omega_rabi() { return kTwoPi * 50e3; }
double IonChainConfig::default_area_a1() { return 0.686 * std::numbers::pi; }
double IonChainConfig::default_area_a2() { return 0.716 * std::numbers::pi; }

void IonChainConfig::validate() const
{
    if (n_qubits < 1 || n_qubits > qsim::kMaxQubits) {
        throw std::invalid_argument("ion chain qubit count out of range");
    }
    if (static_cast<int>(qubit_frequencies.size()) != n_qubits) {
        throw std::invalid_argument("need one addressing frequency per qubit");
    }
    for (double w : qubit_frequencies) {
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw std::invalid_argument("addressing frequencies must be positive");
        }
    }
    if (couplings.n_qubits() != n_qubits) {
        throw std::invalid_argument("coupling matrix size does not match qubit count");
    }
    couplings.validate();
    if (!(omega_rabi > 0.0) || !std::isfinite(omega_rabi)) {
        throw std::invalid_argument("Rabi frequency must be positive");
    }
    for (double t : {t1, t2, t3}) {
        if (!(t >= 0.0) || !std::isfinite(t)) {
            throw std::invalid_argument("evolution times must be nonnegative");
        }
    }
    if (!std::isfinite(area_a1) || !std::isfinite(area_a2)) {
        throw std::invalid_argument("pulse areas must be finite");
    }
    if (dd_pulses_per_qubit < 0) {
        throw std::invalid_argument("dynamical decoupling pulse count must be nonnegative");
    }
}

qsim::ComplexMatrix free_evolution_operator(double t, const IonChainConfig& config)
{
    return qsim::free_evolution_operator(t, config.couplings);
}

}  // namespace ionqft::ion
