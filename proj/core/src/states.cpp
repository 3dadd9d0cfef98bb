#include "sictomo/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sictomo {

Ket ghz() {
    std::vector<Complex> amp(8, Complex(0.0, 0.0));
    const double c = 1.0 / std::sqrt(2.0);
    amp[0] = c;  // |000>
    amp[7] = c;  // |111>
    return Ket(std::move(amp));
}

Ket w() {
    std::vector<Complex> amp(8, Complex(0.0, 0.0));
    const double c = 1.0 / std::sqrt(3.0);
    amp[1] = c;  // |001>
    amp[2] = c;  // |010>
    amp[4] = c;  // |100>
    return Ket(std::move(amp));
}

DensityMatrix pure_density(const Ket& k) {
    if (k.dim() != 2 && k.dim() != 4 && k.dim() != 8) {
        throw std::invalid_argument("pure_density: ket dim must be 2, 4 or 8");
    }
    return DensityMatrix(outer_product(k));
}

DensityMatrix werner(double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw std::invalid_argument("werner: eta must lie in [0, 1], got " +
                                    std::to_string(eta));
    }
    ComplexMatrix m = outer_product(ghz());
    m *= Complex(eta, 0.0);
    const double mixed = (1.0 - eta) / 8.0;
    for (int i = 0; i < 8; ++i) m(i, i) += mixed;
    return DensityMatrix(std::move(m));
}

DensityMatrix maximally_mixed(int dim) {
    if (dim != 2 && dim != 4 && dim != 8) {
        throw std::invalid_argument("maximally_mixed: dim must be 2, 4 or 8, got " +
                                    std::to_string(dim));
    }
    ComplexMatrix m = ComplexMatrix::identity(dim);
    m *= Complex(1.0 / dim, 0.0);
    return DensityMatrix(std::move(m));
}

}  // namespace sictomo
