#include "ionqft/qsim/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace ionqft::qsim {

void dephase_inplace(ComplexMatrix& rho, double rate, double t)
{
    if (!(rate >= 0.0) || !(t >= 0.0)) {
        throw std::invalid_argument("dephasing rate and duration must be nonnegative");
    }
    const double factor = std::exp(-rate * t);
    for (Eigen::Index c = 0; c < rho.cols(); ++c) {
        for (Eigen::Index r = 0; r < rho.rows(); ++r) {
            if (r != c) {
                rho(r, c) *= factor;
            }
        }
    }
}

DensityMatrix dephase(const DensityMatrix& rho, double rate, double t)
{
    ComplexMatrix m = rho.matrix();
    dephase_inplace(m, rate, t);
    return DensityMatrix(rho.n_qubits(), std::move(m));
}

void depolarize_inplace(ComplexMatrix& rho, double zeta)
{
    if (!(zeta >= 0.0 && zeta <= 1.0)) {
        throw std::invalid_argument("depolarization strength must lie in [0, 1]");
    }
    const double mixed = zeta / static_cast<double>(rho.rows());
    rho *= (1.0 - zeta);
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
        rho(i, i) += mixed;
    }
}

DensityMatrix depolarize(const DensityMatrix& rho, double zeta)
{
    ComplexMatrix m = rho.matrix();
    depolarize_inplace(m, zeta);
    return DensityMatrix(rho.n_qubits(), std::move(m));
}

}  // namespace ionqft::qsim
