#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "sictomo/complex_matrix.hpp"
#include "sictomo/eig.hpp"
#include "sictomo/rng.hpp"

using namespace sictomo;

namespace {

ComplexMatrix random_hermitian(int dim, std::uint64_t seed) {
    Xoshiro256pp rng(seed);
    ComplexMatrix a(dim);
    for (int i = 0; i < dim; ++i) {
        a(i, i) = Complex(2.0 * gaussian(rng), 0.0);
        for (int j = i + 1; j < dim; ++j) {
            const Complex z(gaussian(rng), gaussian(rng));
            a(i, j) = z;
            a(j, i) = std::conj(z);
        }
    }
    return a;
}

ComplexMatrix rebuild(const EigResult& eig) {
    const int n = static_cast<int>(eig.eigenvalues.size());
    ComplexMatrix out(n);
    for (int k = 0; k < n; ++k) {
        const Ket& v = eig.eigenvectors[k];
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                out(i, j) += eig.eigenvalues[k] * v[i] * std::conj(v[j]);
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("known spectra") {
    // sigma_x has eigenvalues -1, +1
    ComplexMatrix x(2);
    x(0, 1) = x(1, 0) = Complex(1.0, 0.0);
    EigResult ex = hermitian_eig(x);
    CHECK(ex.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(ex.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));

    // sigma_y exercises the complex rotation path
    ComplexMatrix y(2);
    y(0, 1) = Complex(0.0, -1.0);
    y(1, 0) = Complex(0.0, 1.0);
    EigResult ey = hermitian_eig(y);
    CHECK(ey.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(ey.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));

    // diagonal input comes back sorted
    ComplexMatrix d(3);
    d(0, 0) = Complex(5.0, 0.0);
    d(1, 1) = Complex(-2.0, 0.0);
    d(2, 2) = Complex(1.0, 0.0);
    EigResult ed = hermitian_eig(d);
    CHECK(ed.eigenvalues[0] == -2.0);
    CHECK(ed.eigenvalues[1] == 1.0);
    CHECK(ed.eigenvalues[2] == 5.0);
}

TEST_CASE("reconstruction and orthonormality oracles on random matrices") {
    for (std::uint64_t seed : {101, 102, 103, 104, 105}) {
        ComplexMatrix a = random_hermitian(8, seed);
        EigResult eig = hermitian_eig(a);
        REQUIRE(eig.eigenvalues.size() == 8);

        CHECK(max_abs_diff(rebuild(eig), a) < 1e-12);

        for (int k = 0; k < 8; ++k) {
            CHECK(eig.eigenvalues[k] <= eig.eigenvalues[std::min(k + 1, 7)]);
            for (int l = 0; l < 8; ++l) {
                const Complex g = inner_product(eig.eigenvectors[k],
                                                eig.eigenvectors[l]);
                CHECK(std::abs(g - (k == l ? 1.0 : 0.0)) < 1e-12);
            }
        }

        // eigenvalue sum and square-sum match trace identities
        double sum = 0.0, sq = 0.0;
        for (double v : eig.eigenvalues) {
            sum += v;
            sq += v * v;
        }
        CHECK(sum == doctest::Approx(trace(a).real()).epsilon(1e-12));
        CHECK(sq == doctest::Approx(trace(a * a).real()).epsilon(1e-12));
    }
}

TEST_CASE("eigenvector equation holds columnwise") {
    ComplexMatrix a = random_hermitian(5, 202);
    EigResult eig = hermitian_eig(a);
    for (int k = 0; k < 5; ++k) {
        const Ket& v = eig.eigenvectors[k];
        for (int i = 0; i < 5; ++i) {
            Complex av(0.0, 0.0);
            for (int j = 0; j < 5; ++j) av += a(i, j) * v[j];
            CHECK(std::abs(av - eig.eigenvalues[k] * v[i]) < 1e-12);
        }
    }
}

TEST_CASE("non-hermitian and non-finite inputs are rejected") {
    ComplexMatrix a(2);
    a(0, 1) = Complex(1.0, 0.0);  // a(1,0) left zero
    CHECK_THROWS_AS(hermitian_eig(a), std::invalid_argument);

    ComplexMatrix b(2);
    b(0, 0) = Complex(std::nan(""), 0.0);
    CHECK_THROWS_AS(hermitian_eig(b), std::invalid_argument);
}

TEST_CASE("matrix sqrt squares back") {
    // known diagonal case
    ComplexMatrix d(3);
    d(0, 0) = Complex(4.0, 0.0);
    d(1, 1) = Complex(9.0, 0.0);
    d(2, 2) = Complex(0.25, 0.0);
    ComplexMatrix s = matrix_sqrt_psd(d);
    CHECK(s(0, 0).real() == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(s(1, 1).real() == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(s(2, 2).real() == doctest::Approx(0.5).epsilon(1e-14));

    // random PSD case: G = A^dagger A
    ComplexMatrix a = random_hermitian(6, 303);
    ComplexMatrix g = dagger(a) * a;
    ComplexMatrix r = matrix_sqrt_psd(g);
    CHECK(max_abs_diff(r * r, g) < 1e-10);
    CHECK(hermiticity_defect(r) < 1e-12);

    // projectors are their own root
    Ket e0({Complex(1.0, 0.0), Complex(0.0, 0.0)});
    ComplexMatrix p = outer_product(e0);
    CHECK(max_abs_diff(matrix_sqrt_psd(p), p) < 1e-13);
}

TEST_CASE("sqrt rejects indefinite input") {
    ComplexMatrix m(2);
    m(0, 0) = Complex(1.0, 0.0);
    m(1, 1) = Complex(-0.5, 0.0);
    CHECK_THROWS_AS(matrix_sqrt_psd(m), std::invalid_argument);
}
