#include "sictomo/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sictomo/eig.hpp"

namespace sictomo {

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
    const int d = matrix_.dim();
    if (d != 2 && d != 4 && d != 8) {
        throw std::invalid_argument("DensityMatrix: dim must be 2, 4 or 8, got " +
                                    std::to_string(d));
    }
    const double defect = hermiticity_defect(matrix_);
    if (defect > 1e-10) {
        throw std::invalid_argument("DensityMatrix: not Hermitian (defect " +
                                    std::to_string(defect) + ")");
    }
    const Complex tr = trace(matrix_);
    if (std::abs(tr - Complex(1.0, 0.0)) > 1e-10) {
        throw std::invalid_argument("DensityMatrix: trace is not 1 (got " +
                                    std::to_string(tr.real()) + ")");
    }
    const EigResult eig = hermitian_eig(matrix_);
    if (eig.eigenvalues.front() < -1e-10) {
        throw std::invalid_argument(
            "DensityMatrix: not PSD (smallest eigenvalue " +
            std::to_string(eig.eigenvalues.front()) + ")");
    }
}

CholeskyParams::CholeskyParams(const std::array<double, kNumParams>& values)
    : t_(values) {
    for (double x : t_) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("CholeskyParams: entries must be finite");
        }
    }
}

CholeskyParams::CholeskyParams(std::span<const double> values) : t_{} {
    if (values.size() != kNumParams) {
        throw std::invalid_argument("CholeskyParams: expected 64 values, got " +
                                    std::to_string(values.size()));
    }
    std::copy(values.begin(), values.end(), t_.begin());
    for (double x : t_) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("CholeskyParams: entries must be finite");
        }
    }
}

ComplexMatrix cholesky_factor(const CholeskyParams& p) {
    ComplexMatrix t(8);
    for (int k = 0; k < 8; ++k) t(k, k) = p[k];
    int slot = 8;
    for (int r = 1; r < 8; ++r) {
        for (int c = 0; c < r; ++c) {
            t(r, c) = Complex(p[slot], p[slot + 1]);
            slot += 2;
        }
    }
    return t;
}

DensityMatrix density_from_params(const CholeskyParams& p) {
    const ComplexMatrix t = cholesky_factor(p);

    // G = T^dagger T, lower triangle computed and mirrored: exactly Hermitian
    ComplexMatrix g(8);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j <= i; ++j) {
            Complex s(0.0, 0.0);
            for (int k = 0; k < 8; ++k) s += std::conj(t(k, i)) * t(k, j);
            g(i, j) = s;
            g(j, i) = std::conj(s);
        }
        g(i, i) = std::real(g(i, i));
    }

    double tr = 0.0;
    for (int i = 0; i < 8; ++i) tr += std::real(g(i, i));
    if (tr <= 0.0) {
        throw std::invalid_argument(
            "density_from_params: tr(T^dagger T) must be positive; "
            "the all-zero parameter vector encodes no state");
    }
    g *= Complex(1.0 / tr, 0.0);
    return DensityMatrix(std::move(g));
}

CholeskyParams mixed_state_params() {
    std::array<double, kNumParams> t{};
    for (int k = 0; k < 8; ++k) t[k] = 1.0;
    return CholeskyParams(t);
}

}  // namespace sictomo
