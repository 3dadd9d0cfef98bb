#pragma once

#include "sictomo/complex_matrix.hpp"
#include "sictomo/density.hpp"

namespace sictomo {

/// (|000> + |111>)/sqrt(2). Basis index of |abc> is 4a + 2b + c.
Ket ghz();

/// (|001> + |010> + |100>)/sqrt(3).
Ket w();

/// |psi><psi| for a normalized ket.
DensityMatrix pure_density(const Ket& k);

/// eta |GHZ><GHZ| + (1 - eta)/8 * I_8, with 0 <= eta <= 1.
DensityMatrix werner(double eta);

/// I_dim / dim for dim in {2, 4, 8}.
DensityMatrix maximally_mixed(int dim);

}  // namespace sictomo
