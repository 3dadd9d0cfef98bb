#include "sictomo/chi2.hpp"

#include <cmath>
#include <stdexcept>

#include "sictomo/povm.hpp"

namespace sictomo {

namespace {

using Mat8 = std::array<Complex, 64>;  // row-major 8x8

void build_factor(const std::array<double, kNumParams>& t, Mat8& factor) {
    factor.fill(Complex(0.0, 0.0));
    for (int k = 0; k < 8; ++k) factor[k * 8 + k] = t[k];
    int slot = 8;
    for (int r = 1; r < 8; ++r) {
        for (int c = 0; c < r; ++c) {
            factor[r * 8 + c] = Complex(t[slot], t[slot + 1]);
            slot += 2;
        }
    }
}

// G = T^dagger T (lower triangle mirrored); returns tr(G)
double gram(const Mat8& factor, Mat8& g) {
    double tr = 0.0;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j <= i; ++j) {
            Complex s(0.0, 0.0);
            for (int k = 0; k < 8; ++k) {
                s += std::conj(factor[k * 8 + i]) * factor[k * 8 + j];
            }
            g[i * 8 + j] = s;
            g[j * 8 + i] = std::conj(s);
        }
        g[i * 8 + i] = std::real(g[i * 8 + i]);
        tr += std::real(g[i * 8 + i]);
    }
    return tr;
}

// Re tr(M G) for Hermitian M, G: the real Frobenius inner product
double real_trace_product(const ComplexMatrix& m, const Mat8& g) {
    const auto& me = m.entries();
    double q = 0.0;
    for (int e = 0; e < 64; ++e) {
        q += me[e].real() * g[e].real() + me[e].imag() * g[e].imag();
    }
    return q;
}

struct ModelCounts {
    Mat8 factor;
    Mat8 g;
    double gram_trace;
    std::array<double, kNumOutcomes> m;
};

void compute_model(const std::array<double, kNumParams>& t, double ensemble_mean,
                   ModelCounts& out) {
    build_factor(t, out.factor);
    out.gram_trace = gram(out.factor, out.g);
    if (!(out.gram_trace > 0.0)) {
        throw std::invalid_argument(
            "chi_squared: tr(T^dagger T) must be positive; the all-zero "
            "parameter vector encodes no state");
    }
    const PovmSet& povm = three_qubit_povm();
    const double scale = ensemble_mean / out.gram_trace;
    for (int kappa = 0; kappa < kNumOutcomes; ++kappa) {
        out.m[kappa] = scale * real_trace_product(povm.operators[kappa], out.g);
    }
}

}  // namespace

std::array<double, kNumOutcomes> expected_counts(const CholeskyParams& p,
                                                 double ensemble_mean) {
    if (!(ensemble_mean > 0.0)) {
        throw std::invalid_argument("expected_counts: ensemble_mean must be > 0");
    }
    ModelCounts model;
    compute_model(p.values(), ensemble_mean, model);
    return model.m;
}

Chi2Objective::Chi2Objective(const CountRecord& observed, double denominator_floor)
    : counts_(observed.counts),
      ensemble_mean_(observed.ensemble_mean),
      floor_(denominator_floor) {
    if (!(ensemble_mean_ > 0.0)) {
        throw std::invalid_argument("Chi2Objective: ensemble_mean must be > 0");
    }
    if (!(floor_ > 0.0)) {
        throw std::invalid_argument("Chi2Objective: denominator floor must be > 0");
    }
    for (double n : counts_) {
        if (!std::isfinite(n) || n < 0.0) {
            throw std::invalid_argument(
                "Chi2Objective: counts must be finite and >= 0");
        }
    }
}

double Chi2Objective::value(const std::array<double, kNumParams>& t) const {
    ModelCounts model;
    compute_model(t, ensemble_mean_, model);
    double chi2 = 0.0;
    for (int kappa = 0; kappa < kNumOutcomes; ++kappa) {
        const double r = counts_[kappa] - model.m[kappa];
        chi2 += r * r / std::max(model.m[kappa], floor_);
    }
    return chi2;
}

Chi2Evaluation Chi2Objective::value_and_gradient(
    const std::array<double, kNumParams>& t) const {
    ModelCounts model;
    compute_model(t, ensemble_mean_, model);

    // chi^2 and its per-outcome derivative d chi^2 / d m_kappa
    double chi2 = 0.0;
    std::array<double, kNumOutcomes> dm{};
    double weighted_sum = 0.0;  // sum_kappa dm_kappa * m_kappa
    for (int kappa = 0; kappa < kNumOutcomes; ++kappa) {
        const double m = model.m[kappa];
        const double r = counts_[kappa] - m;
        if (m > floor_) {
            chi2 += r * r / m;
            dm[kappa] = -(2.0 * r * m + r * r) / (m * m);
        } else {
            chi2 += r * r / floor_;
            dm[kappa] = -2.0 * r / floor_;  // floored denominator is constant
        }
        weighted_sum += dm[kappa] * m;
    }

    // With G = T^dagger T, s = tr G and m_kappa = N tr(M_kappa G)/s:
    //   d chi^2 / d T_rc = 2 (B)_rc  where
    //   B = (N/s) T (sum_kappa dm_kappa M_kappa) - (sum_kappa dm_kappa m_kappa / s) T,
    // read off as (Re, Im) parts per parameter slot.
    const PovmSet& povm = three_qubit_povm();
    Mat8 weight{};
    for (int kappa = 0; kappa < kNumOutcomes; ++kappa) {
        const double c = dm[kappa];
        if (c == 0.0) continue;
        const auto& me = povm.operators[kappa].entries();
        for (int e = 0; e < 64; ++e) weight[e] += c * me[e];
    }

    const double n_over_s = ensemble_mean_ / model.gram_trace;
    const double w_over_s = weighted_sum / model.gram_trace;

    Mat8 b{};
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            Complex acc(0.0, 0.0);
            for (int k = 0; k <= i; ++k) {  // factor is lower triangular
                acc += model.factor[i * 8 + k] * weight[k * 8 + j];
            }
            b[i * 8 + j] = n_over_s * acc - w_over_s * model.factor[i * 8 + j];
        }
    }

    Chi2Evaluation eval;
    eval.value = chi2;
    for (int k = 0; k < 8; ++k) eval.gradient[k] = 2.0 * b[k * 8 + k].real();
    int slot = 8;
    for (int r = 1; r < 8; ++r) {
        for (int c = 0; c < r; ++c) {
            eval.gradient[slot] = 2.0 * b[r * 8 + c].real();
            eval.gradient[slot + 1] = 2.0 * b[r * 8 + c].imag();
            slot += 2;
        }
    }
    return eval;
}

double chi_squared(const CholeskyParams& p, const CountRecord& observed) {
    return chi_squared(p, observed,
                       default_denominator_floor(observed.ensemble_mean));
}

double chi_squared(const CholeskyParams& p, const CountRecord& observed,
                   double denominator_floor) {
    return Chi2Objective(observed, denominator_floor).value(p.values());
}

std::array<double, kNumParams> chi_squared_gradient(const CholeskyParams& p,
                                                    const CountRecord& observed) {
    return chi_squared_gradient(p, observed,
                                default_denominator_floor(observed.ensemble_mean));
}

std::array<double, kNumParams> chi_squared_gradient(const CholeskyParams& p,
                                                    const CountRecord& observed,
                                                    double denominator_floor) {
    return Chi2Objective(observed, denominator_floor)
        .value_and_gradient(p.values())
        .gradient;
}

}  // namespace sictomo
