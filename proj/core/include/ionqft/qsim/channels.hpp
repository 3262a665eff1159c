#pragma once

#include "ionqft/qsim/linalg.hpp"

namespace ionqft::qsim {

// Dephasing in the computational basis: every off-diagonal entry is scaled
// by exp(-rate * t), the diagonal is untouched. rate in 1/s, t in s.
DensityMatrix dephase(const DensityMatrix& rho, double rate, double t);
void dephase_inplace(ComplexMatrix& rho, double rate, double t);

// rho -> (zeta / 2^n) I + (1 - zeta) rho, 0 <= zeta <= 1.
DensityMatrix depolarize(const DensityMatrix& rho, double zeta);
void depolarize_inplace(ComplexMatrix& rho, double zeta);

}  // namespace ionqft::qsim
