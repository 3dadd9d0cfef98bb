#include "sictomo/povm.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sictomo/eig.hpp"

namespace sictomo {

std::vector<Ket> sic_vectors() {
    std::vector<Ket> kets;
    kets.reserve(4);
    kets.emplace_back(std::vector<Complex>{Complex(1.0, 0.0), Complex(0.0, 0.0)});
    const double a = 1.0 / std::sqrt(3.0);
    const double b = std::sqrt(2.0 / 3.0);
    for (int m = 2; m <= 4; ++m) {
        const double phi = 2.0 * std::numbers::pi * (m - 2) / 3.0;
        kets.emplace_back(std::vector<Complex>{
            Complex(a, 0.0), b * Complex(std::cos(phi), std::sin(phi))});
    }
    return kets;
}

PovmSet sic_povm() {
    PovmSet set;
    const std::vector<Ket> xi = sic_vectors();
    for (int k = 0; k < 4; ++k) {
        ComplexMatrix op = outer_product(xi[k]);
        op *= Complex(0.5, 0.0);
        set.operators.push_back(std::move(op));
        set.labels.push_back({k + 1});
    }
    return set;
}

const PovmSet& three_qubit_povm() {
    static const PovmSet set = [] {
        PovmSet s;
        const PovmSet qubit = sic_povm();
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                const ComplexMatrix pij =
                    tensor_product(qubit.operators[i], qubit.operators[j]);
                for (int k = 0; k < 4; ++k) {
                    s.operators.push_back(tensor_product(pij, qubit.operators[k]));
                    s.labels.push_back({i + 1, j + 1, k + 1});
                }
            }
        }
        return s;
    }();
    return set;
}

std::vector<double> outcome_probabilities(const DensityMatrix& rho,
                                          const PovmSet& povm) {
    if (rho.dim() != povm.dim()) {
        throw std::invalid_argument(
            "outcome_probabilities: state dim " + std::to_string(rho.dim()) +
            " does not match POVM dim " + std::to_string(povm.dim()));
    }
    const ComplexMatrix& r = rho.matrix();
    const int n = r.dim();
    std::vector<double> probs;
    probs.reserve(povm.operators.size());
    for (const ComplexMatrix& m : povm.operators) {
        // tr(M rho) = sum_ij M(i,j) rho(j,i)
        double p = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                p += std::real(m(i, j) * r(j, i));
            }
        }
        probs.push_back(p < 0.0 ? 0.0 : p);
    }
    return probs;
}

void check_povm(const PovmSet& povm) {
    if (povm.operators.empty()) {
        throw std::invalid_argument("check_povm: empty operator set");
    }
    const int n = povm.dim();
    ComplexMatrix sum(n);
    for (const ComplexMatrix& op : povm.operators) {
        if (op.dim() != n) {
            throw std::invalid_argument("check_povm: mixed operator dimensions");
        }
        const EigResult eig = hermitian_eig(op);  // also rejects non-Hermitian
        if (eig.eigenvalues.front() < -1e-12) {
            throw std::invalid_argument(
                "check_povm: operator has eigenvalue " +
                std::to_string(eig.eigenvalues.front()) + " < -1e-12");
        }
        sum += op;
    }
    const double defect = max_abs_diff(sum, ComplexMatrix::identity(n));
    if (defect > 1e-12) {
        throw std::invalid_argument(
            "check_povm: operators sum to identity only within " +
            std::to_string(defect));
    }
}

}  // namespace sictomo
