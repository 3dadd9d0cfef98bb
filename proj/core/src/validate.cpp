#include "sictomo/validate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sictomo/chi2.hpp"
#include "sictomo/counts.hpp"
#include "sictomo/eig.hpp"
#include "sictomo/metrics.hpp"
#include "sictomo/povm.hpp"
#include "sictomo/reconstruct.hpp"
#include "sictomo/rng.hpp"
#include "sictomo/states.hpp"

namespace sictomo {

namespace {

std::string describe(double worst, double tolerance) {
    std::ostringstream os;
    os << "worst deviation " << worst << " (tolerance " << tolerance << ")";
    return os.str();
}

CheckResult bounded(const std::string& name, double worst, double tolerance) {
    return CheckResult{name, worst <= tolerance, describe(worst, tolerance)};
}

std::array<double, kNumParams> random_params(Xoshiro256pp& rng) {
    std::array<double, kNumParams> t{};
    for (double& v : t) v = gaussian(rng);
    // keep the diagonal away from zero so tr(T^dagger T) stays healthy
    for (int k = 0; k < 8; ++k) t[k] += 2.0;
    return t;
}

CheckResult check_sic_structure() {
    const std::vector<Ket> xi = sic_vectors();
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            const double overlap = std::norm(inner_product(xi[i], xi[j]));
            worst = std::max(worst, std::abs(overlap - 1.0 / 3.0));
        }
    }
    return bounded("sic-overlaps-one-third", worst, 1e-12);
}

CheckResult check_povm_completeness() {
    try {
        check_povm(sic_povm());
        check_povm(three_qubit_povm());
    } catch (const std::exception& e) {
        return CheckResult{"povm-completeness", false, e.what()};
    }
    // per-element trace of the 64-op set
    double worst = 0.0;
    for (const ComplexMatrix& op : three_qubit_povm().operators) {
        worst = std::max(worst, std::abs(trace(op) - Complex(0.125, 0.0)));
    }
    return bounded("povm-completeness", worst, 1e-12);
}

CheckResult check_fidelity_closed_form() {
    const DensityMatrix ghz_rho = pure_density(ghz());
    double worst = 0.0;
    for (int i = 0; i <= 10; ++i) {
        const double eta = 0.1 * i;
        const double expected = eta + (1.0 - eta) / 8.0;
        worst = std::max(worst,
                         std::abs(fidelity(ghz_rho, werner(eta)) - expected));
    }
    return bounded("fidelity-closed-form", worst, 1e-10);
}

CheckResult check_purity_closed_form() {
    double worst = 0.0;
    for (int i = 0; i <= 10; ++i) {
        const double eta = 0.1 * i;
        const double expected =
            eta * eta + eta * (1.0 - eta) / 4.0 + (1.0 - eta) * (1.0 - eta) / 8.0;
        worst = std::max(worst, std::abs(purity(werner(eta)) - expected));
    }
    return bounded("purity-closed-form", worst, 1e-12);
}

CheckResult check_params_physicality() {
    Xoshiro256pp rng(substream_seed(41, 7));
    double worst = 0.0;
    try {
        for (int trial = 0; trial < 20; ++trial) {
            const CholeskyParams p(random_params(rng));
            const DensityMatrix rho = density_from_params(p);  // validates
            worst = std::max(worst, hermiticity_defect(rho.matrix()));
            worst = std::max(worst,
                             std::abs(trace(rho.matrix()) - Complex(1.0, 0.0)));
        }
    } catch (const std::exception& e) {
        return CheckResult{"params-physicality", false, e.what()};
    }
    return bounded("params-physicality", worst, 1e-12);
}

CheckResult check_eig_oracle() {
    Xoshiro256pp rng(substream_seed(43, 11));
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        ComplexMatrix a(8);
        for (int i = 0; i < 8; ++i) {
            a(i, i) = Complex(2.0 * gaussian(rng), 0.0);
            for (int j = i + 1; j < 8; ++j) {
                const Complex z(gaussian(rng), gaussian(rng));
                a(i, j) = z;
                a(j, i) = std::conj(z);
            }
        }
        const EigResult eig = hermitian_eig(a);
        // rebuild V diag(lambda) V^dagger
        ComplexMatrix rebuilt(8);
        for (int k = 0; k < 8; ++k) {
            const Ket& v = eig.eigenvectors[k];
            for (int i = 0; i < 8; ++i) {
                for (int j = 0; j < 8; ++j) {
                    rebuilt(i, j) += eig.eigenvalues[k] * v[i] * std::conj(v[j]);
                }
            }
        }
        worst = std::max(worst, max_abs_diff(rebuilt, a));
        for (int k = 0; k < 8; ++k) {
            for (int l = 0; l < 8; ++l) {
                const Complex g =
                    inner_product(eig.eigenvectors[k], eig.eigenvectors[l]);
                worst = std::max(worst, std::abs(g - (k == l ? 1.0 : 0.0)));
            }
        }
    }
    return bounded("eig-oracle", worst, 1e-11);
}

CheckResult check_sqrt_oracle() {
    Xoshiro256pp rng(substream_seed(47, 13));
    double worst = 0.0;
    try {
        for (int trial = 0; trial < 10; ++trial) {
            const CholeskyParams p(random_params(rng));
            const ComplexMatrix a = density_from_params(p).matrix();
            const ComplexMatrix s = matrix_sqrt_psd(a);
            worst = std::max(worst, max_abs_diff(s * s, a));
            worst = std::max(worst, hermiticity_defect(s));
        }
    } catch (const std::exception& e) {
        return CheckResult{"sqrt-oracle", false, e.what()};
    }
    return bounded("sqrt-oracle", worst, 1e-11);
}

CheckResult check_gradient_consistency() {
    const CountRecord observed =
        simulate_counts(werner(0.4), 100.0, 97, NoiseMode::kPaperLiteral);
    const double floor = default_denominator_floor(observed.ensemble_mean);
    const Chi2Objective objective(observed, floor);

    Xoshiro256pp rng(substream_seed(53, 17));
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        std::array<double, kNumParams> t = random_params(rng);
        const Chi2Evaluation eval = objective.value_and_gradient(t);
        double grad_scale = 0.0;
        for (double g : eval.gradient) grad_scale = std::max(grad_scale, std::abs(g));
        const double h = 1e-6;
        for (int i = 0; i < kNumParams; ++i) {
            std::array<double, kNumParams> plus = t;
            std::array<double, kNumParams> minus = t;
            plus[i] += h;
            minus[i] -= h;
            const double fd = (objective.value(plus) - objective.value(minus)) / (2 * h);
            worst = std::max(worst, std::abs(fd - eval.gradient[i]) / grad_scale);
        }
    }
    return bounded("gradient-vs-finite-difference", worst, 1e-4);
}

CheckResult check_count_determinism() {
    const DensityMatrix rho = werner(0.7);
    const CountRecord a = simulate_counts(rho, 1000.0, 12345, NoiseMode::kPaperLiteral);
    const CountRecord b = simulate_counts(rho, 1000.0, 12345, NoiseMode::kPaperLiteral);
    const CountRecord c = simulate_counts(rho, 1000.0, 12346, NoiseMode::kPaperLiteral);
    if (a.counts != b.counts) {
        return CheckResult{"count-determinism", false,
                           "same seed produced different counts"};
    }
    if (a.counts == c.counts) {
        return CheckResult{"count-determinism", false,
                           "distinct seeds produced identical counts"};
    }
    return CheckResult{"count-determinism", true,
                       "same seed reproduces, distinct seed differs"};
}

CheckResult check_noiseless_roundtrip() {
    const DensityMatrix truth = werner(0.5);
    const CountRecord counts =
        simulate_counts(truth, 1000.0, 0, NoiseMode::kNoiseless);
    const ReconstructionResult rec = reconstruct(counts);
    const double f = fidelity(rec.estimate, truth);
    std::ostringstream os;
    os << "fidelity " << f << ", chi2 " << rec.chi2;
    const bool ok = f >= 0.999 && rec.chi2 <= 1e-6;
    return CheckResult{"noiseless-roundtrip", ok, os.str()};
}

}  // namespace

std::vector<CheckResult> run_invariant_checks() {
    std::vector<CheckResult> results;
    results.push_back(check_sic_structure());
    results.push_back(check_povm_completeness());
    results.push_back(check_fidelity_closed_form());
    results.push_back(check_purity_closed_form());
    results.push_back(check_params_physicality());
    results.push_back(check_eig_oracle());
    results.push_back(check_sqrt_oracle());
    results.push_back(check_gradient_consistency());
    results.push_back(check_count_determinism());
    results.push_back(check_noiseless_roundtrip());
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

}  // namespace sictomo
