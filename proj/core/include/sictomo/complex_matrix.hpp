#pragma once

#include <complex>
#include <vector>

namespace sictomo {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Sized for the Hilbert spaces this
/// toolkit works in (dim <= 8), but nothing below enforces an upper bound.
class ComplexMatrix {
public:
    explicit ComplexMatrix(int dim);

    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }

    Complex& operator()(int row, int col) { return entries_[row * dim_ + col]; }
    const Complex& operator()(int row, int col) const {
        return entries_[row * dim_ + col];
    }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
        return a += b;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
        return a -= b;
    }
    friend ComplexMatrix operator*(Complex scalar, ComplexMatrix a) {
        return a *= scalar;
    }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex scalar) {
        return a *= scalar;
    }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    const std::vector<Complex>& entries() const { return entries_; }

private:
    int dim_;
    std::vector<Complex> entries_;
};

/// Normalized state vector. Construction rejects vectors whose Euclidean
/// norm deviates from 1 by more than 1e-12.
class Ket {
public:
    explicit Ket(std::vector<Complex> amplitudes);

    int dim() const { return static_cast<int>(amplitudes_.size()); }
    const Complex& operator[](int i) const { return amplitudes_[i]; }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }

private:
    std::vector<Complex> amplitudes_;
};

/// Kronecker product: result((i*bd + k), (j*bd + l)) = a(i,j) * b(k,l).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

/// Sum of diagonal entries.
Complex trace(const ComplexMatrix& a);

/// |k><k| as a plain matrix (no density-matrix validation).
ComplexMatrix outer_product(const Ket& k);

Complex inner_product(const Ket& a, const Ket& b);

/// max_ij |a(i,j) - b(i,j)|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max over |a(i,j) - conj(a(j,i))|
double hermiticity_defect(const ComplexMatrix& a);

double frobenius_norm(const ComplexMatrix& a);

}  // namespace sictomo
