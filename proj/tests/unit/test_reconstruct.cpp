#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "sictomo/counts.hpp"
#include "sictomo/density.hpp"
#include "sictomo/metrics.hpp"
#include "sictomo/reconstruct.hpp"
#include "sictomo/states.hpp"

using namespace sictomo;

TEST_CASE("noiseless mixed-state counts recover I/8 entrywise") {
    const CountRecord rec = simulate_counts(maximally_mixed(8), 10000.0, 0,
                                            NoiseMode::kNoiseless);
    const ReconstructionResult res = reconstruct(rec);
    CHECK(res.converged);
    CHECK(res.chi2 < 1e-10);
    CHECK(max_abs_diff(res.estimate.matrix(), maximally_mixed(8).matrix()) <
          1e-3);
}

TEST_CASE("noiseless werner counts recover the state to high fidelity") {
    const DensityMatrix truth = werner(0.5);
    const CountRecord rec =
        simulate_counts(truth, 10000.0, 0, NoiseMode::kNoiseless);
    const ReconstructionResult res = reconstruct(rec);
    CHECK(res.converged);
    CHECK(fidelity(truth, res.estimate) > 0.999);
    CHECK(res.chi2 < 1e-6);
}

TEST_CASE("estimate is exactly the state encoded by the winning params") {
    const CountRecord rec =
        simulate_counts(werner(0.9), 1000.0, 3, NoiseMode::kPaperLiteral);
    const ReconstructionResult res = reconstruct(rec);
    const DensityMatrix rebuilt = density_from_params(res.params);
    CHECK(max_abs_diff(res.estimate.matrix(), rebuilt.matrix()) < 1e-12);
    CHECK(res.restart_index >= 0);
    CHECK(res.restart_index <= 3);
    CHECK(res.iterations > 0);
}

TEST_CASE("reconstruction is deterministic") {
    const CountRecord rec =
        simulate_counts(werner(0.7), 100.0, 12, NoiseMode::kPaperLiteral);
    const ReconstructionResult a = reconstruct(rec);
    const ReconstructionResult b = reconstruct(rec);
    CHECK(a.chi2 == b.chi2);
    CHECK(a.iterations == b.iterations);
    CHECK(a.restart_index == b.restart_index);
    CHECK(a.params.values() == b.params.values());
    CHECK(max_abs_diff(a.estimate.matrix(), b.estimate.matrix()) == 0.0);
}

TEST_CASE("restarts help on noisy data and never hurt") {
    const CountRecord rec =
        simulate_counts(werner(0.85), 100.0, 19, NoiseMode::kPaperLiteral);
    ReconstructionOptions none;
    none.restarts = 0;
    ReconstructionOptions many;
    many.restarts = 5;
    const double chi2_none = reconstruct(rec, none).chi2;
    const double chi2_many = reconstruct(rec, many).chi2;
    CHECK(chi2_many <= chi2_none + 1e-12);
}

TEST_CASE("json output carries the documented schema") {
    const CountRecord rec =
        simulate_counts(werner(0.6), 200.0, 4, NoiseMode::kPoissonCounts);
    const ReconstructionResult res = reconstruct(rec);
    const nlohmann::json j =
        nlohmann::json::parse(reconstruction_result_to_json(res));

    CHECK(j.at("chi2").get<double>() == res.chi2);
    CHECK(j.at("converged").get<bool>() == res.converged);
    CHECK(j.at("iterations").get<int>() == res.iterations);
    REQUIRE(j.at("params").is_array());
    CHECK(j.at("params").size() == 64);
    REQUIRE(j.at("estimate").is_object());
    REQUIRE(j.at("estimate").at("re").is_array());
    REQUIRE(j.at("estimate").at("im").is_array());
    CHECK(j.at("estimate").at("re").size() == 64);
    CHECK(j.at("estimate").at("im").size() == 64);

    // spot-check the row-major layout against the matrix itself
    const double re00 = j.at("estimate").at("re")[0].get<double>();
    const double im07 = j.at("estimate").at("im")[7].get<double>();
    CHECK(re00 == res.estimate.matrix()(0, 0).real());
    CHECK(im07 == res.estimate.matrix()(0, 7).imag());
}

TEST_CASE("option validation") {
    const CountRecord rec = simulate_counts(maximally_mixed(8), 100.0, 0,
                                            NoiseMode::kNoiseless);
    ReconstructionOptions bad;

    bad.max_iterations = 0;
    CHECK_THROWS_AS(reconstruct(rec, bad), std::invalid_argument);

    bad = {};
    bad.gradient_tolerance = -1.0;
    CHECK_THROWS_AS(reconstruct(rec, bad), std::invalid_argument);

    bad = {};
    bad.objective_tolerance = 0.0;
    CHECK_THROWS_AS(reconstruct(rec, bad), std::invalid_argument);

    bad = {};
    bad.restarts = -1;
    CHECK_THROWS_AS(reconstruct(rec, bad), std::invalid_argument);

    bad = {};
    bad.restarts = 33;
    CHECK_THROWS_AS(reconstruct(rec, bad), std::invalid_argument);

    bad = {};
    bad.denominator_floor = 0.0;
    CHECK_THROWS_AS(reconstruct(rec, bad), std::invalid_argument);
}
