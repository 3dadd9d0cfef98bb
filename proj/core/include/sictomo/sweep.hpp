#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sictomo/counts.hpp"
#include "sictomo/reconstruct.hpp"

namespace sictomo {

/// One tomography campaign: reconstruct werner(eta) for every
/// (eta, ensemble_mean, seed) combination.
struct SweepConfig {
    std::vector<double> eta_grid;                          // sorted, in [0, 1]
    std::vector<double> ensemble_means = {10.0, 100.0, 1000.0};
    std::vector<std::uint64_t> seeds = {0};
    NoiseMode noise_mode = NoiseMode::kPaperLiteral;
    ReconstructionOptions reconstruction;
};

struct SweepRecord {
    double eta;
    double ensemble_mean;
    std::uint64_t seed;
    double fidelity;
    double purity_estimate;
    double purity_true;
    double chi2;
    bool converged;
};

/// 21 points, 0 to 1 in steps of 0.05.
std::vector<double> default_eta_grid();

/// Runs every (eta, ensemble_mean, seed) cell in that nesting order, so
/// output ordering is deterministic. A cell whose optimizer fails to
/// converge still yields a record (converged = false); nothing aborts the
/// sweep short of an invalid config.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

/// CSV, one row per record, header
/// eta,ensemble_mean,seed,fidelity,purity_estimate,purity_true,chi2,converged.
/// Floats use shortest round-trip formatting; converged is 1 or 0. The same
/// records always serialize to the same bytes.
std::string sweep_to_csv(const std::vector<SweepRecord>& records);

/// Parse a declarative config. Recognized keys mirror SweepConfig:
/// eta_grid, ensemble_means, seeds, noise_mode, and a reconstruction object
/// with max_iterations, gradient_tolerance, objective_tolerance, restarts,
/// denominator_floor (null for the automatic value). Missing keys keep
/// their defaults (eta_grid defaults to default_eta_grid()); unknown keys
/// are rejected.
SweepConfig sweep_config_from_json(const std::string& text);

enum class NamedState { kGhz, kW };

std::string to_string(NamedState state);
NamedState named_state_from_string(const std::string& name);  // "ghz" | "w"

struct NamedStateRun {
    std::vector<ReconstructionResult> results;  // one per seed, input order
    std::vector<double> fidelities;
    double mean_fidelity;
    double min_fidelity;
    double max_fidelity;
};

/// Per-seed reconstructions of |GHZ> or |W> at one ensemble mean, with a
/// fidelity summary against the exact pure state.
NamedStateRun run_named_state(NamedState state, double ensemble_mean,
                              const std::vector<std::uint64_t>& seeds,
                              NoiseMode mode = NoiseMode::kPaperLiteral,
                              const ReconstructionOptions& options = {});

}  // namespace sictomo
