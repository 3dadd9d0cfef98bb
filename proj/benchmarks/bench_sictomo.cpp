#include <benchmark/benchmark.h>

#include <array>

#include "sictomo/chi2.hpp"
#include "sictomo/complex_matrix.hpp"
#include "sictomo/counts.hpp"
#include "sictomo/density.hpp"
#include "sictomo/eig.hpp"
#include "sictomo/metrics.hpp"
#include "sictomo/poisson.hpp"
#include "sictomo/reconstruct.hpp"
#include "sictomo/rng.hpp"
#include "sictomo/states.hpp"

using namespace sictomo;

namespace {

ComplexMatrix random_hermitian(int dim, std::uint64_t seed) {
    Xoshiro256pp rng(seed);
    ComplexMatrix a(dim);
    for (int i = 0; i < dim; ++i) {
        a(i, i) = Complex(gaussian(rng), 0.0);
        for (int j = i + 1; j < dim; ++j) {
            const Complex z(gaussian(rng), gaussian(rng));
            a(i, j) = z;
            a(j, i) = std::conj(z);
        }
    }
    return a;
}

std::array<double, kNumParams> random_params(std::uint64_t seed) {
    Xoshiro256pp rng(seed);
    std::array<double, kNumParams> v{};
    for (double& x : v) x = gaussian(rng);
    return v;
}

void bm_tensor_product(benchmark::State& state) {
    const ComplexMatrix a = random_hermitian(4, 1);
    const ComplexMatrix b = random_hermitian(2, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tensor_product(a, b));
    }
}
BENCHMARK(bm_tensor_product);

void bm_hermitian_eig(benchmark::State& state) {
    const ComplexMatrix a = random_hermitian(8, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eig(a));
    }
}
BENCHMARK(bm_hermitian_eig);

void bm_fidelity(benchmark::State& state) {
    const DensityMatrix a = werner(0.4);
    const DensityMatrix b = werner(0.8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fidelity(a, b));
    }
}
BENCHMARK(bm_fidelity);

void bm_chi2_value(benchmark::State& state) {
    const CountRecord rec =
        simulate_counts(werner(0.7), 1000.0, 0, NoiseMode::kPaperLiteral);
    const Chi2Objective obj(rec, default_denominator_floor(1000.0));
    const auto t = random_params(4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(obj.value(t));
    }
}
BENCHMARK(bm_chi2_value);

void bm_chi2_gradient(benchmark::State& state) {
    const CountRecord rec =
        simulate_counts(werner(0.7), 1000.0, 0, NoiseMode::kPaperLiteral);
    const Chi2Objective obj(rec, default_denominator_floor(1000.0));
    const auto t = random_params(4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(obj.value_and_gradient(t));
    }
}
BENCHMARK(bm_chi2_gradient);

void bm_poisson_sample(benchmark::State& state) {
    const double lambda = static_cast<double>(state.range(0));
    Xoshiro256pp rng(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(poisson_sample(lambda, rng));
    }
}
BENCHMARK(bm_poisson_sample)->Arg(10)->Arg(1000);

void bm_simulate_counts(benchmark::State& state) {
    const DensityMatrix rho = werner(0.6);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            simulate_counts(rho, 1000.0, seed++, NoiseMode::kPaperLiteral));
    }
}
BENCHMARK(bm_simulate_counts);

void bm_reconstruct(benchmark::State& state) {
    const CountRecord rec =
        simulate_counts(werner(0.5), 1000.0, 7, NoiseMode::kPaperLiteral);
    ReconstructionOptions options;
    options.restarts = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(reconstruct(rec, options));
    }
}
BENCHMARK(bm_reconstruct)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
