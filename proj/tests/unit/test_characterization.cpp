#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "sictomo/metrics.hpp"
#include "sictomo/states.hpp"
#include "sictomo/sweep.hpp"

using namespace sictomo;

namespace {

struct PointStats {
    double mean_fidelity;
    double mean_purity_error;  // estimate - truth
};

PointStats run_point(double eta, double ensemble_mean, int num_seeds) {
    SweepConfig config;
    config.eta_grid = {eta};
    config.ensemble_means = {ensemble_mean};
    config.seeds.clear();
    for (int s = 0; s < num_seeds; ++s) config.seeds.push_back(s);
    const std::vector<SweepRecord> records = run_sweep(config);

    PointStats stats{0.0, 0.0};
    for (const SweepRecord& r : records) {
        stats.mean_fidelity += r.fidelity;
        stats.mean_purity_error += r.purity_estimate - r.purity_true;
    }
    stats.mean_fidelity /= records.size();
    stats.mean_purity_error /= records.size();
    return stats;
}

}  // namespace

// A 64-parameter fit to 64 noisy counts has zero residual degrees of
// freedom, so shot noise in outcomes tied to the seven small eigenvalues
// (1 - eta)/8 of a near-pure target is absorbed into the estimate instead
// of averaged away. Fidelity is curvature-weighted by 1/eigenvalue, which
// produces a reproducible dip near eta ~ 0.9 that recovers at eta = 1
// (there the pure-target fidelity only reads the dominant component).
// These tests pin that behavior so a regression or an accidental "fix"
// that changes the estimator is caught.
TEST_CASE("fidelity dip near eta = 0.9 at ensemble mean 1000") {
    const PointStats dip = run_point(0.9, 1000.0, 25);
    CHECK(dip.mean_fidelity > 0.945);
    CHECK(dip.mean_fidelity < 0.985);

    const PointStats endpoint = run_point(1.0, 1000.0, 25);
    CHECK(endpoint.mean_fidelity > dip.mean_fidelity);
}

TEST_CASE("purity underestimates a pure target by a few percent") {
    // At eta = 1 the rank-1 target leaks weight into spurious tail
    // eigenvalues, so tr(rho_est^2) lands below 1 by a few percent.
    const PointStats pure = run_point(1.0, 1000.0, 25);
    CHECK(pure.mean_purity_error < -0.01);
    CHECK(pure.mean_purity_error > -0.06);

    // Away from purity 1 the bias is an order of magnitude smaller.
    const PointStats mixed = run_point(0.25, 1000.0, 25);
    CHECK(std::abs(mixed.mean_purity_error) < 0.01);
}

TEST_CASE("fidelity improves monotonically with ensemble mean") {
    const double f10 = run_point(0.5, 10.0, 15).mean_fidelity;
    const double f100 = run_point(0.5, 100.0, 15).mean_fidelity;
    const double f1000 = run_point(0.5, 1000.0, 15).mean_fidelity;
    CHECK(f10 < f100);
    CHECK(f100 < f1000);
    CHECK(f1000 > 0.98);
}
