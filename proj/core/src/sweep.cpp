#include "sictomo/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "sictomo/metrics.hpp"
#include "sictomo/states.hpp"

namespace sictomo {

namespace {

// shortest decimal string that parses back to exactly the same double
std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void check_config(const SweepConfig& config) {
    if (config.eta_grid.empty()) {
        throw std::invalid_argument("run_sweep: eta_grid must be nonempty");
    }
    double prev = -1.0;
    for (double eta : config.eta_grid) {
        if (!(eta >= 0.0 && eta <= 1.0)) {
            throw std::invalid_argument("run_sweep: eta values must lie in [0, 1]");
        }
        if (eta < prev) {
            throw std::invalid_argument("run_sweep: eta_grid must be sorted ascending");
        }
        prev = eta;
    }
    if (config.ensemble_means.empty()) {
        throw std::invalid_argument("run_sweep: ensemble_means must be nonempty");
    }
    for (double n : config.ensemble_means) {
        if (!(n > 0.0) || !std::isfinite(n)) {
            throw std::invalid_argument("run_sweep: ensemble means must be positive");
        }
    }
    if (config.seeds.empty()) {
        throw std::invalid_argument("run_sweep: seeds must be nonempty");
    }
}

}  // namespace

std::vector<double> default_eta_grid() {
    std::vector<double> grid(21);
    for (int i = 0; i <= 20; ++i) grid[i] = 0.05 * i;
    grid.back() = 1.0;
    return grid;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
    check_config(config);

    std::vector<SweepRecord> records;
    records.reserve(config.eta_grid.size() * config.ensemble_means.size() *
                    config.seeds.size());
    for (double eta : config.eta_grid) {
        const DensityMatrix truth = werner(eta);
        const double purity_true = purity(truth);
        for (double ensemble_mean : config.ensemble_means) {
            for (std::uint64_t seed : config.seeds) {
                const CountRecord counts =
                    simulate_counts(truth, ensemble_mean, seed, config.noise_mode);
                const ReconstructionResult rec =
                    reconstruct(counts, config.reconstruction);
                records.push_back(SweepRecord{
                    eta, ensemble_mean, seed, fidelity(rec.estimate, truth),
                    purity(rec.estimate), purity_true, rec.chi2, rec.converged});
            }
        }
    }
    return records;
}

std::string sweep_to_csv(const std::vector<SweepRecord>& records) {
    std::string out =
        "eta,ensemble_mean,seed,fidelity,purity_estimate,purity_true,chi2,"
        "converged\n";
    for (const SweepRecord& r : records) {
        out += format_double(r.eta);
        out += ',';
        out += format_double(r.ensemble_mean);
        out += ',';
        out += std::to_string(r.seed);
        out += ',';
        out += format_double(r.fidelity);
        out += ',';
        out += format_double(r.purity_estimate);
        out += ',';
        out += format_double(r.purity_true);
        out += ',';
        out += format_double(r.chi2);
        out += ',';
        out += r.converged ? '1' : '0';
        out += '\n';
    }
    return out;
}

SweepConfig sweep_config_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr,
                                             /*allow_exceptions=*/false);
    if (j.is_discarded()) {
        throw std::invalid_argument("sweep config: input is not valid JSON");
    }
    if (!j.is_object()) {
        throw std::invalid_argument("sweep config: top level must be an object");
    }

    SweepConfig config;
    config.eta_grid = default_eta_grid();

    for (const auto& [key, value] : j.items()) {
        if (key == "eta_grid") {
            config.eta_grid = value.get<std::vector<double>>();
        } else if (key == "ensemble_means") {
            config.ensemble_means = value.get<std::vector<double>>();
        } else if (key == "seeds") {
            config.seeds = value.get<std::vector<std::uint64_t>>();
        } else if (key == "noise_mode") {
            config.noise_mode = noise_mode_from_string(value.get<std::string>());
        } else if (key == "reconstruction") {
            if (!value.is_object()) {
                throw std::invalid_argument(
                    "sweep config: reconstruction must be an object");
            }
            ReconstructionOptions& opt = config.reconstruction;
            for (const auto& [rkey, rvalue] : value.items()) {
                if (rkey == "max_iterations") {
                    opt.max_iterations = rvalue.get<int>();
                } else if (rkey == "gradient_tolerance") {
                    opt.gradient_tolerance = rvalue.get<double>();
                } else if (rkey == "objective_tolerance") {
                    opt.objective_tolerance = rvalue.get<double>();
                } else if (rkey == "restarts") {
                    opt.restarts = rvalue.get<int>();
                } else if (rkey == "denominator_floor") {
                    if (rvalue.is_null()) {
                        opt.denominator_floor.reset();
                    } else {
                        opt.denominator_floor = rvalue.get<double>();
                    }
                } else {
                    throw std::invalid_argument(
                        "sweep config: unknown reconstruction key '" + rkey + "'");
                }
            }
        } else {
            throw std::invalid_argument("sweep config: unknown key '" + key + "'");
        }
    }
    check_config(config);
    return config;
}

std::string to_string(NamedState state) {
    return state == NamedState::kGhz ? "ghz" : "w";
}

NamedState named_state_from_string(const std::string& name) {
    if (name == "ghz") return NamedState::kGhz;
    if (name == "w") return NamedState::kW;
    throw std::invalid_argument("unknown state '" + name + "' (expected ghz or w)");
}

NamedStateRun run_named_state(NamedState state, double ensemble_mean,
                              const std::vector<std::uint64_t>& seeds,
                              NoiseMode mode,
                              const ReconstructionOptions& options) {
    if (!(ensemble_mean > 0.0) || !std::isfinite(ensemble_mean)) {
        throw std::invalid_argument("run_named_state: ensemble_mean must be positive");
    }
    if (seeds.empty()) {
        throw std::invalid_argument("run_named_state: seeds must be nonempty");
    }

    const DensityMatrix truth =
        pure_density(state == NamedState::kGhz ? ghz() : w());

    NamedStateRun run;
    run.results.reserve(seeds.size());
    run.fidelities.reserve(seeds.size());
    double sum = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::uint64_t seed : seeds) {
        const CountRecord counts = simulate_counts(truth, ensemble_mean, seed, mode);
        ReconstructionResult rec = reconstruct(counts, options);
        const double f = fidelity(rec.estimate, truth);
        sum += f;
        lo = std::min(lo, f);
        hi = std::max(hi, f);
        run.fidelities.push_back(f);
        run.results.push_back(std::move(rec));
    }
    run.mean_fidelity = sum / static_cast<double>(seeds.size());
    run.min_fidelity = lo;
    run.max_fidelity = hi;
    return run;
}

}  // namespace sictomo
