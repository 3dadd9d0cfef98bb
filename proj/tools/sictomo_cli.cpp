// Command-line front end: `sweep` writes fidelity/purity CSVs over an eta
// grid, `state` reconstructs GHZ or W and can dump the estimate as JSON,
// `validate` runs the library's invariant suite.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sictomo/sweep.hpp"
#include "sictomo/validate.hpp"

namespace {

// Either a bare count N (use seeds 0..N-1) or an explicit comma-separated
// list of 64-bit seeds.
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
    std::vector<std::uint64_t> seeds;
    std::stringstream ss(text);
    std::string item;
    bool has_comma = text.find(',') != std::string::npos;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            throw std::invalid_argument("--seeds: empty entry in '" + text + "'");
        }
        std::size_t used = 0;
        std::uint64_t value = std::stoull(item, &used);
        if (used != item.size()) {
            throw std::invalid_argument("--seeds: bad integer '" + item + "'");
        }
        seeds.push_back(value);
    }
    if (seeds.empty()) {
        throw std::invalid_argument("--seeds: no entries in '" + text + "'");
    }
    if (!has_comma && seeds.size() == 1) {
        const std::uint64_t count = seeds[0];
        if (count == 0) {
            throw std::invalid_argument("--seeds: count must be at least 1");
        }
        if (count > 100000) {
            throw std::invalid_argument("--seeds: count too large; pass a list");
        }
        seeds.clear();
        for (std::uint64_t s = 0; s < count; ++s) seeds.push_back(s);
    }
    return seeds;
}

std::vector<double> make_eta_grid(double eta_min, double eta_max, int steps) {
    if (steps < 1) throw std::invalid_argument("--eta-steps must be at least 1");
    if (eta_min < 0.0 || eta_max > 1.0 || eta_min > eta_max) {
        throw std::invalid_argument("--eta-min/--eta-max must satisfy 0 <= min <= max <= 1");
    }
    std::vector<double> grid;
    if (steps == 1) {
        grid.push_back(eta_min);
        return grid;
    }
    for (int i = 0; i < steps; ++i) {
        grid.push_back(eta_min + (eta_max - eta_min) * i / (steps - 1));
    }
    grid.back() = eta_max;
    return grid;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

int run_sweep_command(const std::string& config_path, double eta_min,
                      double eta_max, int eta_steps,
                      const std::vector<double>& ensembles,
                      const std::string& seeds_text, const std::string& mode,
                      const std::string& out_path) {
    sictomo::SweepConfig config;
    if (!config_path.empty()) {
        config = sictomo::sweep_config_from_json(read_file(config_path));
    } else {
        config.eta_grid = make_eta_grid(eta_min, eta_max, eta_steps);
        if (!ensembles.empty()) config.ensemble_means = ensembles;
        config.seeds = parse_seeds(seeds_text);
        config.noise_mode = sictomo::noise_mode_from_string(mode);
    }

    const std::vector<sictomo::SweepRecord> records = sictomo::run_sweep(config);
    const std::string csv = sictomo::sweep_to_csv(records);
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        write_file(out_path, csv);
        std::cerr << "wrote " << records.size() << " records to " << out_path
                  << "\n";
    }
    return 0;
}

int run_state_command(const std::string& state_name, double ensemble_mean,
                      const std::string& seeds_text, const std::string& mode,
                      const std::string& dump_path) {
    const sictomo::NamedState state =
        sictomo::named_state_from_string(state_name);
    const std::vector<std::uint64_t> seeds = parse_seeds(seeds_text);
    const sictomo::NamedStateRun run = sictomo::run_named_state(
        state, ensemble_mean, seeds, sictomo::noise_mode_from_string(mode));

    std::cout << "state=" << sictomo::to_string(state)
              << " ensemble_mean=" << ensemble_mean << " mode=" << mode
              << " seeds=" << seeds.size() << "\n";
    std::cout.precision(6);
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        std::cout << "seed " << seeds[i] << ": fidelity " << run.fidelities[i]
                  << " chi2 " << run.results[i].chi2
                  << (run.results[i].converged ? "" : " (not converged)")
                  << "\n";
    }
    std::cout << "fidelity mean=" << run.mean_fidelity
              << " min=" << run.min_fidelity << " max=" << run.max_fidelity
              << "\n";

    if (!dump_path.empty()) {
        write_file(dump_path,
                   sictomo::reconstruction_result_to_json(run.results.front()));
        std::cerr << "wrote first-seed estimate to " << dump_path << "\n";
    }
    return 0;
}

int run_validate_command() {
    const std::vector<sictomo::CheckResult> results =
        sictomo::run_invariant_checks();
    for (const sictomo::CheckResult& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << ": "
                  << r.detail << "\n";
    }
    if (!sictomo::all_passed(results)) {
        std::cerr << "invariant suite failed\n";
        return 1;
    }
    std::cout << "all invariants hold\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Three-qubit state tomography: simulate SIC-POVM counts, "
                 "reconstruct density matrices, sweep the Werner parameter"};
    app.require_subcommand(1);

    // sweep
    auto* sweep = app.add_subcommand(
        "sweep", "Reconstruct werner(eta) over an eta grid; emit CSV");
    std::string config_path;
    double eta_min = 0.0;
    double eta_max = 1.0;
    int eta_steps = 21;
    std::vector<double> ensembles;
    std::string seeds_text = "1";
    std::string mode = "paper-literal";
    std::string out_path;
    auto* opt_config = sweep->add_option(
        "--config", config_path, "JSON config file mirroring SweepConfig");
    auto* opt_min = sweep->add_option("--eta-min", eta_min, "grid start");
    auto* opt_max = sweep->add_option("--eta-max", eta_max, "grid end");
    auto* opt_steps =
        sweep->add_option("--eta-steps", eta_steps, "grid point count");
    auto* opt_ens = sweep->add_option(
        "--ensemble", ensembles, "ensemble mean N (repeatable; default 10 100 1000)");
    auto* opt_seeds = sweep->add_option(
        "--seeds", seeds_text, "seed count N (uses 0..N-1) or comma-separated list");
    auto* opt_mode = sweep->add_option("--mode", mode,
                                       "paper-literal | poisson-counts | noiseless");
    sweep->add_option("--out", out_path, "output CSV path (default: stdout)");
    for (auto* opt : {opt_min, opt_max, opt_steps, opt_ens, opt_seeds, opt_mode}) {
        opt_config->excludes(opt);
    }

    // state
    auto* state = app.add_subcommand(
        "state", "Reconstruct the GHZ or W state for a batch of seeds");
    std::string state_name;
    double state_ensemble = 1000.0;
    std::string state_seeds = "1";
    std::string state_mode = "paper-literal";
    std::string dump_path;
    state->add_option("--state", state_name, "ghz | w")->required();
    state->add_option("--ensemble", state_ensemble, "ensemble mean N");
    state->add_option("--seeds", state_seeds,
                      "seed count N (uses 0..N-1) or comma-separated list");
    state->add_option("--mode", state_mode,
                      "paper-literal | poisson-counts | noiseless");
    state->add_option("--dump-matrix", dump_path,
                      "write the first seed's estimate (JSON) here");

    // validate
    app.add_subcommand("validate", "Run the library invariant suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) {
            return run_sweep_command(config_path, eta_min, eta_max, eta_steps,
                                     ensembles, seeds_text, mode, out_path);
        }
        if (state->parsed()) {
            return run_state_command(state_name, state_ensemble, state_seeds,
                                     state_mode, dump_path);
        }
        return run_validate_command();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
