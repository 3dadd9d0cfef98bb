#include "sictomo/counts.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "sictomo/poisson.hpp"
#include "sictomo/povm.hpp"
#include "sictomo/rng.hpp"

namespace sictomo {

std::string to_string(NoiseMode mode) {
    switch (mode) {
        case NoiseMode::kPaperLiteral: return "paper-literal";
        case NoiseMode::kPoissonCounts: return "poisson-counts";
        case NoiseMode::kNoiseless: return "noiseless";
    }
    throw std::logic_error("to_string: unknown NoiseMode");
}

NoiseMode noise_mode_from_string(const std::string& name) {
    if (name == "paper-literal") return NoiseMode::kPaperLiteral;
    if (name == "poisson-counts") return NoiseMode::kPoissonCounts;
    if (name == "noiseless") return NoiseMode::kNoiseless;
    throw std::invalid_argument(
        "unknown noise mode '" + name +
        "' (expected paper-literal, poisson-counts or noiseless)");
}

CountRecord simulate_counts(const DensityMatrix& rho, double ensemble_mean,
                            std::uint64_t seed, NoiseMode mode) {
    if (rho.dim() != 8) {
        throw std::invalid_argument("simulate_counts: state must be 8-dimensional");
    }
    if (!(ensemble_mean > 0.0)) {
        throw std::invalid_argument("simulate_counts: ensemble_mean must be > 0");
    }

    const std::vector<double> probs =
        outcome_probabilities(rho, three_qubit_povm());

    CountRecord record{};
    record.ensemble_mean = ensemble_mean;
    record.seed = seed;
    record.mode = mode;

    for (int kappa = 0; kappa < kNumOutcomes; ++kappa) {
        const double p = probs[kappa];
        switch (mode) {
            case NoiseMode::kNoiseless:
                record.counts[kappa] = ensemble_mean * p;
                break;
            case NoiseMode::kPaperLiteral: {
                Xoshiro256pp stream(substream_seed(seed, kappa));
                const auto ensemble = poisson_sample(ensemble_mean, stream);
                record.counts[kappa] = static_cast<double>(ensemble) * p;
                break;
            }
            case NoiseMode::kPoissonCounts: {
                if (p == 0.0) {
                    record.counts[kappa] = 0.0;  // Poisson(0) is identically 0
                    break;
                }
                Xoshiro256pp stream(substream_seed(seed, kappa));
                record.counts[kappa] = static_cast<double>(
                    poisson_sample(ensemble_mean * p, stream));
                break;
            }
        }
    }
    return record;
}

std::string count_record_to_json(const CountRecord& record) {
    nlohmann::json j;
    j["mode"] = to_string(record.mode);
    j["ensemble_mean"] = record.ensemble_mean;
    j["seed"] = record.seed;
    j["counts"] = record.counts;
    return j.dump(2);
}

CountRecord count_record_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    CountRecord record{};
    record.mode = noise_mode_from_string(j.at("mode").get<std::string>());
    record.ensemble_mean = j.at("ensemble_mean").get<double>();
    record.seed = j.at("seed").get<std::uint64_t>();
    const auto counts = j.at("counts").get<std::vector<double>>();
    if (counts.size() != kNumOutcomes) {
        throw std::invalid_argument("count record: expected 64 counts, got " +
                                    std::to_string(counts.size()));
    }
    for (int i = 0; i < kNumOutcomes; ++i) {
        if (!(counts[i] >= 0.0) || !std::isfinite(counts[i])) {
            throw std::invalid_argument("count record: counts must be finite and >= 0");
        }
        record.counts[i] = counts[i];
    }
    return record;
}

}  // namespace sictomo
