#pragma once

#include <cstdint>

#include "sictomo/rng.hpp"

namespace sictomo {

/// Draw from Poisson(lambda), lambda > 0. Exact at every lambda used here:
/// the exponential-gap multiplication method below lambda = 30, Hormann's
/// transformed-rejection method (PTRS) above. Deterministic given the rng
/// state.
std::uint64_t poisson_sample(double lambda, Xoshiro256pp& rng);

}  // namespace sictomo
