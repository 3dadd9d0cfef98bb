#pragma once

#include "sictomo/density.hpp"

namespace sictomo {

/// Uhlmann fidelity (tr sqrt(sqrt(a) b sqrt(a)))^2, clamped to [0, 1].
/// Symmetric in its arguments to ~1e-9; for pure a it reduces to <psi|b|psi>.
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

/// tr(rho^2), clamped to [1/dim, 1].
double purity(const DensityMatrix& rho);

}  // namespace sictomo
