#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "sictomo/density.hpp"

namespace sictomo {

/// How coincidence counts acquire shot noise.
///   kPaperLiteral: count_k = Ntilde_k * p_k with Ntilde_k ~ Poisson(N) drawn
///                  independently per operator (counts may be non-integer).
///   kPoissonCounts: count_k ~ Poisson(N * p_k); the conventional model.
///   kNoiseless:     count_k = N * p_k exactly.
enum class NoiseMode { kPaperLiteral, kPoissonCounts, kNoiseless };

std::string to_string(NoiseMode mode);
NoiseMode noise_mode_from_string(const std::string& name);

inline constexpr int kNumOutcomes = 64;

/// One simulated acquisition: 64 coincidence counts plus the inputs that
/// produced them.
struct CountRecord {
    std::array<double, kNumOutcomes> counts;
    double ensemble_mean;
    std::uint64_t seed;
    NoiseMode mode;
};

/// Simulate counts for an 8-dim state against the 64 three-qubit SIC
/// operators. Each operator index draws from its own substream of `seed`,
/// so per-operator noise is independent and reproducible regardless of
/// evaluation order.
CountRecord simulate_counts(const DensityMatrix& rho, double ensemble_mean,
                            std::uint64_t seed, NoiseMode mode);

/// JSON with fields {"mode", "ensemble_mean", "seed", "counts"}.
std::string count_record_to_json(const CountRecord& record);
CountRecord count_record_from_json(const std::string& text);

}  // namespace sictomo
