#include "sictomo/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sictomo/rng.hpp"

namespace sictomo {

namespace {

using Params = std::array<double, kNumParams>;

double norm(const Params& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

void normalize(Params& x) {
    const double n = norm(x);
    if (n == 0.0) {
        throw std::invalid_argument("reconstruct: degenerate all-zero iterate");
    }
    for (double& v : x) v /= n;
}

double dot(const Params& a, const Params& b) {
    double s = 0.0;
    for (int i = 0; i < kNumParams; ++i) s += a[i] * b[i];
    return s;
}

struct LocalMinimum {
    Params x;
    double value;
    int iterations;
    bool converged;
};

/// Dense BFGS on the unit sphere of parameter vectors. The objective is
/// invariant under rescaling, so renormalizing each iterate removes the one
/// flat direction; curvature pairs that fail the positivity check are
/// skipped rather than forced.
LocalMinimum minimize_bfgs(const Chi2Objective& objective, Params start,
                           const ReconstructionOptions& options) {
    constexpr int n = kNumParams;
    constexpr double kArmijoSlope = 1e-4;
    constexpr int kMaxBacktracks = 60;

    normalize(start);
    Params x = start;
    Chi2Evaluation eval = objective.value_and_gradient(x);

    // inverse Hessian approximation, row-major n x n
    std::vector<double> h(static_cast<std::size_t>(n) * n, 0.0);
    auto reset_h = [&h] {
        std::fill(h.begin(), h.end(), 0.0);
        for (int i = 0; i < n; ++i) h[i * n + i] = 1.0;
    };
    reset_h();
    bool h_is_identity = true;

    LocalMinimum out{x, eval.value, 0, false};

    for (int iter = 1; iter <= options.max_iterations; ++iter) {
        out.iterations = iter;

        double grad_norm = norm(eval.gradient);
        if (grad_norm <= options.gradient_tolerance) {
            out.converged = true;
            break;
        }

        // p = -H g
        Params p{};
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += h[i * n + j] * eval.gradient[j];
            p[i] = -s;
        }
        double slope = dot(eval.gradient, p);
        if (!(slope < 0.0)) {
            reset_h();
            h_is_identity = true;
            for (int i = 0; i < n; ++i) p[i] = -eval.gradient[i];
            slope = -grad_norm * grad_norm;
        }

        // backtracking Armijo line search; iterates live on the unit sphere
        double alpha = 1.0;
        bool accepted = false;
        Params x_new{};
        double f_new = eval.value;
        for (int bt = 0; bt < kMaxBacktracks; ++bt) {
            for (int i = 0; i < n; ++i) x_new[i] = x[i] + alpha * p[i];
            const double step_norm = norm(x_new);
            if (step_norm > 0.0 && std::isfinite(step_norm)) {
                for (double& v : x_new) v /= step_norm;
                f_new = objective.value(x_new);
                if (std::isfinite(f_new) &&
                    f_new <= eval.value + kArmijoSlope * alpha * slope) {
                    accepted = true;
                    break;
                }
            }
            alpha *= 0.5;
        }

        if (!accepted) {
            // no measurable decrease along a descent direction
            out.converged = true;
            break;
        }

        const Chi2Evaluation eval_new = objective.value_and_gradient(x_new);

        Params s{};
        Params y{};
        for (int i = 0; i < n; ++i) {
            s[i] = x_new[i] - x[i];
            y[i] = eval_new.gradient[i] - eval.gradient[i];
        }
        const double sy = dot(s, y);
        if (sy > 1e-12 * norm(s) * norm(y)) {
            if (h_is_identity) {
                // Shanno-Phua scaling before the first update
                const double yy = dot(y, y);
                if (yy > 0.0) {
                    const double scale = sy / yy;
                    for (int i = 0; i < n; ++i) h[i * n + i] = scale;
                }
                h_is_identity = false;
            }
            // H <- (I - r s y^T) H (I - r y s^T) + r s s^T, r = 1/sy
            const double r = 1.0 / sy;
            Params hy{};
            for (int i = 0; i < n; ++i) {
                double acc = 0.0;
                for (int j = 0; j < n; ++j) acc += h[i * n + j] * y[j];
                hy[i] = acc;
            }
            const double yhy = dot(y, hy);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    h[i * n + j] += r * r * yhy * s[i] * s[j] -
                                    r * (s[i] * hy[j] + hy[i] * s[j]) +
                                    r * s[i] * s[j];
                }
            }
        }

        const double decrease = eval.value - f_new;
        x = x_new;
        eval = eval_new;
        eval.value = f_new;
        out.x = x;
        out.value = f_new;

        if (decrease <= options.objective_tolerance) {
            out.converged = true;
            break;
        }
    }

    return out;
}

void check_options(const ReconstructionOptions& options) {
    if (options.max_iterations <= 0) {
        throw std::invalid_argument("reconstruct: max_iterations must be > 0");
    }
    if (!(options.gradient_tolerance > 0.0)) {
        throw std::invalid_argument("reconstruct: gradient_tolerance must be > 0");
    }
    if (!(options.objective_tolerance > 0.0)) {
        throw std::invalid_argument("reconstruct: objective_tolerance must be > 0");
    }
    if (options.restarts < 0 || options.restarts > 32) {
        throw std::invalid_argument("reconstruct: restarts must lie in [0, 32]");
    }
    if (options.denominator_floor && !(*options.denominator_floor > 0.0)) {
        throw std::invalid_argument("reconstruct: denominator_floor must be > 0");
    }
}

}  // namespace

ReconstructionResult reconstruct(const CountRecord& observed,
                                 const ReconstructionOptions& options) {
    check_options(options);
    const double floor = options.denominator_floor
                             ? *options.denominator_floor
                             : default_denominator_floor(observed.ensemble_mean);
    const Chi2Objective objective(observed, floor);

    const Params mixed_start = mixed_state_params().values();

    std::optional<LocalMinimum> best;
    int best_start = 0;
    for (int start_index = 0; start_index <= options.restarts; ++start_index) {
        Params start = mixed_start;
        if (start_index > 0) {
            Xoshiro256pp stream(substream_seed(
                observed.seed, kRestartStreamBase + start_index - 1));
            for (double& v : start) v += 0.1 * gaussian(stream);
        }
        LocalMinimum local = minimize_bfgs(objective, start, options);
        if (!best || local.value < best->value) {
            best = std::move(local);
            best_start = start_index;
        }
    }

    CholeskyParams params(best->x);
    return ReconstructionResult{density_from_params(params), params,
                                best->value,  best->iterations,
                                best->converged, best_start};
}

std::string reconstruction_result_to_json(const ReconstructionResult& result) {
    nlohmann::json j;
    j["chi2"] = result.chi2;
    j["converged"] = result.converged;
    j["iterations"] = result.iterations;
    j["params"] = result.params.values();
    const ComplexMatrix& m = result.estimate.matrix();
    std::vector<double> re;
    std::vector<double> im;
    re.reserve(m.entries().size());
    im.reserve(m.entries().size());
    for (const Complex& e : m.entries()) {
        re.push_back(e.real());
        im.push_back(e.imag());
    }
    j["estimate"] = {{"re", re}, {"im", im}};
    return j.dump(2);
}

}  // namespace sictomo
