#pragma once

#include <array>
#include <span>

#include "sictomo/complex_matrix.hpp"

namespace sictomo {

/// Validated quantum state: Hermitian (defect <= 1e-10), unit trace
/// (|tr - 1| <= 1e-10), PSD (smallest eigenvalue >= -1e-10), dim in {2,4,8}.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m);

    int dim() const { return matrix_.dim(); }
    const ComplexMatrix& matrix() const { return matrix_; }

private:
    ComplexMatrix matrix_;
};

inline constexpr int kNumParams = 64;

/// 64 real parameters of the lower-triangular factor T (8x8):
/// slots 0..7 hold the real diagonal T(k,k); the remaining 56 fill the 28
/// strictly-lower entries in row-major order as (real, imaginary) pairs.
class CholeskyParams {
public:
    explicit CholeskyParams(const std::array<double, kNumParams>& values);
    explicit CholeskyParams(std::span<const double> values);

    const std::array<double, kNumParams>& values() const { return t_; }
    double operator[](int i) const { return t_[i]; }

private:
    std::array<double, kNumParams> t_;
};

/// The lower-triangular T encoded by p.
ComplexMatrix cholesky_factor(const CholeskyParams& p);

/// sigma = T^dagger T / tr(T^dagger T). Physical by construction; rejects
/// the all-zero parameter vector.
DensityMatrix density_from_params(const CholeskyParams& p);

/// Parameters of the maximally mixed state: unit diagonal slots, zero
/// elsewhere. The optimizer's ignorance prior.
CholeskyParams mixed_state_params();

}  // namespace sictomo
