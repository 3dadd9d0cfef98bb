#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sictomo/poisson.hpp"
#include "sictomo/rng.hpp"

using namespace sictomo;

namespace {

struct Moments {
    double mean;
    double variance;
};

Moments sample_moments(double lambda, int draws, std::uint64_t seed) {
    Xoshiro256pp rng(seed);
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < draws; ++i) {
        const double x = static_cast<double>(poisson_sample(lambda, rng));
        sum += x;
        sum_sq += x * x;
    }
    const double mean = sum / draws;
    return {mean, sum_sq / draws - mean * mean};
}

}  // namespace

TEST_CASE("mean and variance track lambda across both sampler regimes") {
    // Straddle the algorithm switch at lambda = 30. Bands are 4 standard
    // errors wide: se(mean) = sqrt(lambda/n), se(var) ~ sqrt((2l^2+l)/n).
    const int n = 100000;
    for (double lambda : {1.5, 10.0, 29.5, 30.0, 100.0, 1000.0}) {
        const Moments m = sample_moments(lambda, n, 7777);
        const double se_mean = std::sqrt(lambda / n);
        const double se_var =
            std::sqrt((2.0 * lambda * lambda + lambda) / n);
        CHECK(std::abs(m.mean - lambda) < 4.0 * se_mean);
        CHECK(std::abs(m.variance - lambda) < 4.0 * se_var);
    }
}

TEST_CASE("small lambda matches exact probabilities") {
    // P(0) = e^-l, P(1) = l e^-l at lambda = 0.5; 5-sigma binomial bands.
    const double lambda = 0.5;
    const int n = 200000;
    Xoshiro256pp rng(31);
    int zeros = 0, ones = 0;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t x = poisson_sample(lambda, rng);
        zeros += x == 0;
        ones += x == 1;
    }
    auto band = [n](double p) { return 5.0 * std::sqrt(p * (1.0 - p) / n); };
    const double p0 = std::exp(-lambda);
    const double p1 = lambda * std::exp(-lambda);
    CHECK(std::abs(static_cast<double>(zeros) / n - p0) < band(p0));
    CHECK(std::abs(static_cast<double>(ones) / n - p1) < band(p1));
}

TEST_CASE("deterministic given the generator state") {
    for (double lambda : {3.0, 250.0}) {
        Xoshiro256pp a(99);
        Xoshiro256pp b(99);
        std::vector<std::uint64_t> xs, ys;
        for (int i = 0; i < 64; ++i) {
            xs.push_back(poisson_sample(lambda, a));
            ys.push_back(poisson_sample(lambda, b));
        }
        CHECK(xs == ys);
    }
}

TEST_CASE("different substreams decorrelate") {
    Xoshiro256pp a(substream_seed(5, 0));
    Xoshiro256pp b(substream_seed(5, 1));
    int equal = 0;
    for (int i = 0; i < 200; ++i) {
        equal += poisson_sample(50.0, a) == poisson_sample(50.0, b);
    }
    CHECK(equal < 40);  // identical streams would give 200
}

TEST_CASE("invalid lambda is rejected") {
    Xoshiro256pp rng(1);
    CHECK_THROWS_AS(poisson_sample(0.0, rng), std::invalid_argument);
    CHECK_THROWS_AS(poisson_sample(-2.0, rng), std::invalid_argument);
    CHECK_THROWS_AS(poisson_sample(std::nan(""), rng), std::invalid_argument);
}
