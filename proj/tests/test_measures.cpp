#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "skewent/error.hpp"
#include "skewent/linalg.hpp"
#include "skewent/measures.hpp"
#include "skewent/states.hpp"

using namespace skewent;

namespace {

// -1/2 Tr([sqrt(rho), X]^2) with the square root taken by Cayley-Hamilton.
double skew_oracle_2x2(const ComplexMatrix& rho, const ComplexMatrix& x) {
    const ComplexMatrix r = oracle::sqrt_2x2(rho);
    const ComplexMatrix c = r * x - x * r;
    return -0.5 * (c * c).trace().real();
}

}  // namespace

TEST_CASE("skew information of qubit examples") {
    const Observable sz(pauli_z());

    SUBCASE("|+> against sigma_z is 1") {
        CHECK(skew_information(density_from_bloch({1, 0, 0}), sz) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("maximally mixed state carries none") {
        CHECK(skew_information(density_from_bloch({0, 0, 0}), sz) == 0.0);
    }
    SUBCASE("eigenstate of the observable carries none") {
        CHECK(skew_information(density_from_bloch({0, 0, 1}), sz) < 1e-15);
        CHECK(skew_information(density_from_bloch({0, 0, -0.6}), sz) < 1e-15);
    }
    SUBCASE("n = (0.4, 0.3, 0)") {
        // |n| = 0.5 in the equatorial plane: (1 - sqrt(0.75)) * 1.
        const DensityMatrix rho = density_from_bloch({0.4, 0.3, 0.0});
        const double expected = 1.0 - std::sqrt(0.75);
        CHECK(std::abs(expected - 0.1339746) < 1e-7);
        CHECK(skew_information(rho, sz) == doctest::Approx(expected).epsilon(1e-12));
        CHECK(skew_oracle_2x2(rho.matrix(), pauli_z()) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("skew information matches the Cayley-Hamilton oracle on random qubits") {
    // Full rank only: the oracle's sqrt(det) loses half the digits near det = 0.
    SplitMix64 rng(11);
    for (int k = 0; k < 200; ++k) {
        const DensityMatrix rho = random_density(2, 2, rng);
        const ComplexMatrix x = random_hermitian(2, rng);
        const double got = skew_information(rho, Observable(x));
        CHECK(std::abs(got - skew_oracle_2x2(rho.matrix(), x)) < 1e-12);
    }
}

TEST_CASE("commutator and trace forms agree") {
    SplitMix64 rng(12);
    for (int k = 0; k < 100; ++k) {
        const std::size_t d = 2 + k % 5;
        const DensityMatrix rho = random_density(d, 1 + k % d, rng);
        const Observable x(random_hermitian(d, rng));
        CHECK(std::abs(skew_information(rho, x) - skew_information_rewritten(rho, x)) < 1e-12);
    }
}

TEST_CASE("pure states: skew information equals variance") {
    SplitMix64 rng(13);
    for (int k = 0; k < 100; ++k) {
        const std::size_t d = 2 + k % 4;
        const DensityMatrix rho = random_density(d, 1, rng);
        const Observable x(random_hermitian(d, rng));
        CHECK(std::abs(skew_information(rho, x) - variance(rho, x)) < 1e-10);
    }
}

TEST_CASE("skew information is bounded by variance and nonnegative") {
    SplitMix64 rng(14);
    for (int k = 0; k < 100; ++k) {
        const std::size_t d = 2 + k % 5;
        const DensityMatrix rho = random_density(d, d, rng);
        const Observable x(random_hermitian(d, rng));
        const double i = skew_information(rho, x);
        CHECK(i >= 0.0);
        CHECK(i <= variance(rho, x) + 1e-12);
    }
}

TEST_CASE("skew information vanishes for commuting pairs") {
    SplitMix64 rng(15);
    for (int k = 0; k < 50; ++k) {
        const std::size_t d = 2 + k % 4;
        const ComplexMatrix u = random_unitary(d, rng);
        std::vector<double> p(d), e(d);
        double total = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            p[i] = rng.uniform() + 0.05;
            total += p[i];
            e[i] = rng.gaussian();
        }
        for (auto& v : p) v /= total;
        const ComplexMatrix rho = u * ComplexMatrix::diagonal(p) * u.adjoint();
        const ComplexMatrix x = u * ComplexMatrix::diagonal(e) * u.adjoint();
        CHECK(skew_information(DensityMatrix(rho.hermitian_part()), Observable(x.hermitian_part())) < 1e-12);
    }
}

TEST_CASE("skew information is convex in the state") {
    SplitMix64 rng(16);
    for (int k = 0; k < 50; ++k) {
        const std::size_t d = 2 + k % 3;
        const DensityMatrix a = random_density(d, 1 + k % d, rng);
        const DensityMatrix b = random_density(d, d, rng);
        const Observable x(random_hermitian(d, rng));
        const double lambda = rng.uniform();
        const DensityMatrix mix((a.matrix() * lambda + b.matrix() * (1.0 - lambda)).hermitian_part());
        CHECK(skew_information(mix, x) <=
              lambda * skew_information(a, x) + (1.0 - lambda) * skew_information(b, x) + 1e-12);
    }
}

TEST_CASE("mixedness and purity") {
    CHECK(mixedness(density_from_bloch({0.4, 0.3, 0.0})) == doctest::Approx(0.375).epsilon(1e-14));
    CHECK(purity(density_from_bloch({0.4, 0.3, 0.0})) == doctest::Approx(0.625).epsilon(1e-14));
    CHECK(mixedness(density_from_bloch({0.0, 0.0, 0.0})) == doctest::Approx(0.5));
    CHECK(mixedness(density_from_bloch({0.0, 1.0, 0.0})) == 0.0);
    CHECK(mixedness(DensityMatrix(ComplexMatrix::identity(4) * 0.25)) == doctest::Approx(0.75));

    SplitMix64 rng(17);
    for (int k = 0; k < 50; ++k) {
        const std::size_t d = 2 + k % 6;
        const DensityMatrix rho = random_density(d, 1 + k % d, rng);
        const double m = mixedness(rho);
        CHECK(m >= 0.0);
        CHECK(m <= 1.0 - 1.0 / static_cast<double>(d) + 1e-12);
        CHECK(std::abs(m + purity(rho) - 1.0) < 1e-14);
    }
}

TEST_CASE("variance") {
    const Observable sz(pauli_z());
    CHECK(variance(density_from_bloch({1, 0, 0}), sz) == doctest::Approx(1.0));
    CHECK(variance(density_from_bloch({0, 0, 1}), sz) == 0.0);
    // 1 - n_z^2 for a qubit against sigma_z.
    CHECK(variance(density_from_bloch({0.1, 0.2, 0.6}), sz) == doctest::Approx(0.64).epsilon(1e-13));
}

TEST_CASE("dimension mismatch is rejected") {
    const DensityMatrix rho = density_from_bloch({0, 0, 0});
    const Observable x(ComplexMatrix::identity(3));
    CHECK_THROWS_AS(skew_information(rho, x), Error);
    CHECK_THROWS_AS(skew_information_rewritten(rho, x), Error);
    CHECK_THROWS_AS(variance(rho, x), Error);
    try {
        skew_information(rho, x);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DimensionMismatch);
    }
}
