#pragma once

#include <vector>

#include "sictomo/complex_matrix.hpp"
#include "sictomo/density.hpp"

namespace sictomo {

/// Ordered POVM: operators plus their outcome labels. Labels are 1-based
/// SIC indices: one index per entry for the single-qubit set, a triple
/// (i,j,k) for the three-qubit set.
struct PovmSet {
    std::vector<ComplexMatrix> operators;
    std::vector<std::vector<int>> labels;

    int dim() const { return operators.empty() ? 0 : operators.front().dim(); }
    int size() const { return static_cast<int>(operators.size()); }
};

/// The four SIC kets:
///   |xi_1> = |0>,  |xi_m> = (1/sqrt(3))|0> + sqrt(2/3) e^{i phi_m} |1>
/// with phi_2 = 0, phi_3 = 2 pi/3, phi_4 = 4 pi/3.
std::vector<Ket> sic_vectors();

/// P_k = (1/2)|xi_k><xi_k|; four elements summing to I_2.
PovmSet sic_povm();

/// M_(i,j,k) = P_i (x) P_j (x) P_k for i,j,k in 1..4, ordered
/// lexicographically by (i,j,k); 64 elements summing to I_8.
const PovmSet& three_qubit_povm();

/// p_kappa = Re tr(M_kappa rho), tiny negative round-off clamped to 0.
std::vector<double> outcome_probabilities(const DensityMatrix& rho,
                                          const PovmSet& povm);

/// Throws unless every element is Hermitian PSD (eigenvalues >= -1e-12)
/// and the set sums to the identity within 1e-12.
void check_povm(const PovmSet& povm);

}  // namespace sictomo
