#include "sictomo/poisson.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sictomo {

namespace {

// Multiplication method: count uniforms until their product drops below
// e^{-lambda}. O(lambda) draws; exp(-30) ~ 9e-14 stays comfortably normal.
std::uint64_t poisson_small(double lambda, Xoshiro256pp& rng) {
    const double threshold = std::exp(-lambda);
    std::uint64_t k = 0;
    double prod = rng.uniform01();
    while (prod > threshold) {
        ++k;
        prod *= rng.uniform01();
    }
    return k;
}

// Hormann's PTRS transformed rejection (W. Hormann, "The transformed
// rejection method for generating Poisson random variables", 1993).
// Valid for lambda >= 10; used here from 30 up.
std::uint64_t poisson_ptrs(double lambda, Xoshiro256pp& rng) {
    const double slam = std::sqrt(lambda);
    const double loglam = std::log(lambda);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);

    for (;;) {
        const double u = rng.uniform01() - 0.5;
        const double v = rng.uniform_open01();
        const double us = 0.5 - std::abs(u);
        const double kf = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
        if (us >= 0.07 && v <= v_r) {
            return static_cast<std::uint64_t>(kf);
        }
        if (kf < 0.0 || (us < 0.013 && v > us)) {
            continue;
        }
        const double k = kf;
        if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
            k * loglam - lambda - std::lgamma(k + 1.0)) {
            return static_cast<std::uint64_t>(kf);
        }
    }
}

}  // namespace

std::uint64_t poisson_sample(double lambda, Xoshiro256pp& rng) {
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("poisson_sample: lambda must be > 0, got " +
                                    std::to_string(lambda));
    }
    return lambda < 30.0 ? poisson_small(lambda, rng) : poisson_ptrs(lambda, rng);
}

}  // namespace sictomo
