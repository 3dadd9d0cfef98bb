#pragma once

#include <array>

#include "sictomo/counts.hpp"
#include "sictomo/density.hpp"

namespace sictomo {

/// Floor applied to the chi-squared denominator when none is configured.
inline double default_denominator_floor(double ensemble_mean) {
    return 1e-9 * ensemble_mean;
}

/// m_kappa = N tr(M_kappa sigma(p)) against the 64 three-qubit SIC
/// operators; sums to N by completeness. Rejects all-zero p.
std::array<double, kNumOutcomes> expected_counts(const CholeskyParams& p,
                                                 double ensemble_mean);

/// chi^2(p) = sum_kappa (n_kappa - m_kappa)^2 / max(m_kappa, floor).
double chi_squared(const CholeskyParams& p, const CountRecord& observed);
double chi_squared(const CholeskyParams& p, const CountRecord& observed,
                   double denominator_floor);

/// Analytic d chi^2 / d t. Matches central finite differences to ~1e-4
/// relative away from the denominator floor kink.
std::array<double, kNumParams> chi_squared_gradient(const CholeskyParams& p,
                                                    const CountRecord& observed);
std::array<double, kNumParams> chi_squared_gradient(const CholeskyParams& p,
                                                    const CountRecord& observed,
                                                    double denominator_floor);

struct Chi2Evaluation {
    double value;
    std::array<double, kNumParams> gradient;
};

/// The fit objective bound to one observed record. Exposes the raw
/// 64-parameter surface the optimizer walks; scale-free, so callers may
/// renormalize parameter vectors freely.
class Chi2Objective {
public:
    Chi2Objective(const CountRecord& observed, double denominator_floor);

    double value(const std::array<double, kNumParams>& t) const;
    Chi2Evaluation value_and_gradient(const std::array<double, kNumParams>& t) const;

    double ensemble_mean() const { return ensemble_mean_; }
    double denominator_floor() const { return floor_; }

private:
    std::array<double, kNumOutcomes> counts_;
    double ensemble_mean_;
    double floor_;
};

}  // namespace sictomo
