#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "sictomo/complex_matrix.hpp"
#include "sictomo/states.hpp"

using namespace sictomo;

TEST_CASE("ghz amplitudes sit at |000> and |111>") {
    const Ket g = ghz();
    REQUIRE(g.dim() == 8);
    const double amp = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < 8; ++i) {
        const Complex want =
            (i == 0 || i == 7) ? Complex(amp, 0.0) : Complex(0.0, 0.0);
        CHECK(std::abs(g[i] - want) < 1e-15);
    }
}

TEST_CASE("w amplitudes sit at |001>, |010>, |100>") {
    const Ket k = w();
    REQUIRE(k.dim() == 8);
    const double amp = 1.0 / std::sqrt(3.0);
    for (int i = 0; i < 8; ++i) {
        const Complex want = (i == 1 || i == 2 || i == 4) ? Complex(amp, 0.0)
                                                          : Complex(0.0, 0.0);
        CHECK(std::abs(k[i] - want) < 1e-15);
    }
}

TEST_CASE("pure_density is the projector onto the ket") {
    const DensityMatrix rho = pure_density(ghz());
    const ComplexMatrix& m = rho.matrix();
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const bool corner = (i == 0 || i == 7) && (j == 0 || j == 7);
            const double want = corner ? 0.5 : 0.0;
            CHECK(std::abs(m(i, j) - Complex(want, 0.0)) < 1e-15);
        }
    }
}

TEST_CASE("werner entries follow the closed form") {
    for (double eta : {0.0, 0.3, 0.5, 0.85, 1.0}) {
        const DensityMatrix rho = werner(eta);
        const ComplexMatrix& m = rho.matrix();
        const double mix = (1.0 - eta) / 8.0;
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) {
                double want = 0.0;
                if (i == j) want = mix;
                if ((i == 0 || i == 7) && (j == 0 || j == 7))
                    want += 0.5 * eta;
                CHECK(std::abs(m(i, j) - Complex(want, 0.0)) < 1e-15);
            }
        }
    }
}

TEST_CASE("werner endpoints are the mixed state and the ghz projector") {
    CHECK(max_abs_diff(werner(0.0).matrix(), maximally_mixed(8).matrix()) <
          1e-15);
    CHECK(max_abs_diff(werner(1.0).matrix(), pure_density(ghz()).matrix()) <
          1e-15);
}

TEST_CASE("werner rejects mixing parameters outside [0, 1]") {
    CHECK_THROWS_AS(werner(-0.01), std::invalid_argument);
    CHECK_THROWS_AS(werner(1.01), std::invalid_argument);
    CHECK_THROWS_AS(werner(std::nan("")), std::invalid_argument);
}

TEST_CASE("maximally_mixed covers the supported dimensions") {
    for (int dim : {2, 4, 8}) {
        const DensityMatrix rho = maximally_mixed(dim);
        const ComplexMatrix& m = rho.matrix();
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                const double want = i == j ? 1.0 / dim : 0.0;
                CHECK(std::abs(m(i, j) - Complex(want, 0.0)) < 1e-15);
            }
        }
    }
    CHECK_THROWS_AS(maximally_mixed(3), std::invalid_argument);
}

TEST_CASE("unnormalized amplitudes never reach pure_density") {
    // Ket itself owns the normalization check, so the bad state is
    // unrepresentable downstream.
    CHECK_THROWS_AS(Ket({Complex(0.5, 0.0), Complex(0.5, 0.0)}),
                    std::invalid_argument);
}
