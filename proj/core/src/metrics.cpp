#include "sictomo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sictomo/eig.hpp"

namespace sictomo {

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("fidelity: dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()) + ")");
    }
    const ComplexMatrix sqrt_a = matrix_sqrt_psd(a.matrix());
    ComplexMatrix inner = sqrt_a * b.matrix() * sqrt_a;
    // analytically Hermitian; symmetrize away the matmul round-off
    const int n = inner.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            const Complex avg = 0.5 * (inner(i, j) + std::conj(inner(j, i)));
            inner(i, j) = avg;
            inner(j, i) = std::conj(avg);
        }
        inner(i, i) = std::real(inner(i, i));
    }
    const double root_sum = std::real(trace(matrix_sqrt_psd(inner)));
    return std::clamp(root_sum * root_sum, 0.0, 1.0);
}

double purity(const DensityMatrix& rho) {
    const ComplexMatrix& r = rho.matrix();
    const int n = r.dim();
    // tr(rho^2) = sum_ij rho(i,j) rho(j,i) = sum_ij |rho(i,j)|^2
    double g = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) g += std::norm(r(i, j));
    }
    return std::clamp(g, 1.0 / n, 1.0);
}

}  // namespace sictomo
