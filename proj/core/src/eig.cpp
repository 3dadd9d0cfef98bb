#include "sictomo/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sictomo {

namespace {

double off_diagonal_frobenius(const ComplexMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            if (i != j) s += std::norm(a(i, j));
        }
    }
    return std::sqrt(s);
}

}  // namespace

EigResult hermitian_eig(const ComplexMatrix& input) {
    for (const auto& e : input.entries()) {
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
            throw std::invalid_argument("hermitian_eig: input has non-finite entries");
        }
    }
    if (hermiticity_defect(input) > 1e-10) {
        throw std::invalid_argument(
            "hermitian_eig: input is not Hermitian (defect " +
            std::to_string(hermiticity_defect(input)) + ")");
    }

    const int n = input.dim();
    ComplexMatrix a = input;
    ComplexMatrix v = ComplexMatrix::identity(n);

    constexpr double kOffTol = 1e-14;
    constexpr int kMaxSweeps = 100;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_frobenius(a) <= kOffTol) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double r = std::abs(a(p, q));
                if (r == 0.0) continue;
                // phase takes the pivot to a real symmetric 2x2 block
                const Complex phase = a(p, q) / r;
                const double alpha = std::real(a(p, p));
                const double beta = std::real(a(q, q));
                const double theta = (beta - alpha) / (2.0 * r);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) /
                    (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // unitary restricted to (p,q): [[c, s], [-s*conj(phase), c*conj(phase)]]
                const Complex upq = s;
                const Complex uqp = -s * std::conj(phase);
                const Complex uqq = c * std::conj(phase);

                for (int k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp + uqp * akq;
                    a(k, q) = upq * akp + uqq * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk + std::conj(uqp) * aqk;
                    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
                }
                // pin the analytically exact values against rounding drift
                a(p, p) = alpha - t * r;
                a(q, q) = beta + t * r;
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                for (int k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp + uqp * vkq;
                    v(k, q) = upq * vkp + uqq * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return std::real(a(i, i)) < std::real(a(j, j));
    });

    EigResult result;
    result.eigenvalues.reserve(n);
    result.eigenvectors.reserve(n);
    for (int idx : order) {
        result.eigenvalues.push_back(std::real(a(idx, idx)));
        std::vector<Complex> column(n);
        double norm2 = 0.0;
        for (int k = 0; k < n; ++k) {
            column[k] = v(k, idx);
            norm2 += std::norm(column[k]);
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto& c : column) c *= inv;
        result.eigenvectors.emplace_back(std::move(column));
    }
    return result;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& a) {
    EigResult eig = hermitian_eig(a);

    double lambda_max = 0.0;
    for (double lambda : eig.eigenvalues) lambda_max = std::max(lambda_max, lambda);
    const double zero_band = 1e-13 * lambda_max;

    const int n = a.dim();
    std::vector<double> roots(n);
    for (int i = 0; i < n; ++i) {
        const double lambda = eig.eigenvalues[i];
        if (lambda < -1e-10) {
            throw std::invalid_argument(
                "matrix_sqrt_psd: matrix is not PSD (eigenvalue " +
                std::to_string(lambda) + ")");
        }
        roots[i] = lambda <= zero_band ? 0.0 : std::sqrt(lambda);
    }

    // V diag(sqrt(lambda)) V^dagger, lower triangle mirrored for exact hermiticity
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            Complex s(0.0, 0.0);
            for (int k = 0; k < n; ++k) {
                if (roots[k] == 0.0) continue;
                s += roots[k] * eig.eigenvectors[k][i] *
                     std::conj(eig.eigenvectors[k][j]);
            }
            out(i, j) = s;
            out(j, i) = std::conj(s);
        }
        out(i, i) = std::real(out(i, i));
    }
    return out;
}

}  // namespace sictomo
