#pragma once

#include <optional>
#include <string>

#include "sictomo/chi2.hpp"
#include "sictomo/counts.hpp"
#include "sictomo/density.hpp"

namespace sictomo {

struct ReconstructionOptions {
    int max_iterations = 2000;
    double gradient_tolerance = 1e-6;
    double objective_tolerance = 1e-10;
    int restarts = 3;  // additional perturbed starts beyond the mixed-state one
    /// chi^2 denominator floor; when unset, 1e-9 * ensemble_mean is used.
    std::optional<double> denominator_floor;
};

struct ReconstructionResult {
    DensityMatrix estimate;
    CholeskyParams params;
    double chi2;
    int iterations;
    bool converged;
    int restart_index;  // which start produced the winning minimum
};

/// Minimize chi^2 over the 64 Cholesky parameters by BFGS with backtracking
/// line search and an analytic gradient. Starts at the maximally mixed
/// state; restarts perturb that start with Gaussian noise of scale 0.1
/// (streams derived from observed.seed). The parameter vector is
/// renormalized to unit Euclidean norm after every iterate, which fixes the
/// scale gauge without changing the encoded state. The best minimum across
/// starts wins; ties go to the lowest restart index. The estimate is a
/// valid density matrix whether or not the run converged.
ReconstructionResult reconstruct(const CountRecord& observed,
                                 const ReconstructionOptions& options = {});

/// JSON with fields {"chi2", "converged", "iterations", "params",
/// "estimate": {"re": [64 row-major], "im": [64 row-major]}}.
std::string reconstruction_result_to_json(const ReconstructionResult& result);

}  // namespace sictomo
