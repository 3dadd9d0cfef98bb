#pragma once

#include <vector>

#include "sictomo/complex_matrix.hpp"

namespace sictomo {

struct EigResult {
    std::vector<double> eigenvalues;  // ascending
    std::vector<Ket> eigenvectors;    // orthonormal, eigenvectors[i] <-> eigenvalues[i]
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Sweeps run until the off-diagonal Frobenius norm drops below 1e-14 or
/// 100 sweeps elapse. Rejects inputs whose hermiticity defect exceeds 1e-10.
EigResult hermitian_eig(const ComplexMatrix& a);

/// Principal square root of a Hermitian PSD matrix via eigendecomposition.
/// Eigenvalues below -1e-10 are rejected as non-PSD; the round-off band
/// [-1e-10, 1e-13 * lambda_max) is clamped to exactly zero so that spurious
/// rank never leaks into the root.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& a);

}  // namespace sictomo
