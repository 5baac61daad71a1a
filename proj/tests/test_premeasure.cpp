#include <doctest.h>

#include <cmath>
#include <numbers>

#include "skewent/error.hpp"
#include "skewent/linalg.hpp"
#include "skewent/premeasure.hpp"
#include "skewent/states.hpp"

using namespace skewent;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

ComplexMatrix ket_of(std::initializer_list<cplx> amps) {
    ComplexMatrix v(amps.size(), 1);
    std::size_t i = 0;
    for (auto a : amps) v(i++, 0) = a;
    return v;
}

}  // namespace

TEST_CASE("isometry for the computational PVM") {
    const PremeasurementSetup setup(computational_pvm());
    const ComplexMatrix v = premeasurement_isometry(setup);
    REQUIRE(v.rows() == 4);
    REQUIRE(v.cols() == 2);
    // |0> -> |00>, |1> -> |11>
    const ComplexMatrix expected = {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 1.0}};
    CHECK(v == expected);
    CHECK(v.adjoint() * v == ComplexMatrix::identity(2));
}

TEST_CASE("isometry is an isometry for random PVMs") {
    SplitMix64 rng(21);
    for (int k = 0; k < 50; ++k) {
        const std::size_t d = 2 + k % 4;
        const PremeasurementSetup setup(pvm_from_observable(Observable(random_hermitian(d, rng))));
        const ComplexMatrix v = premeasurement_isometry(setup);
        CHECK(max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(d)) < 1e-12);
    }
}

TEST_CASE("premeasuring |+> gives the Bell projector") {
    const DensityMatrix plus = density_from_bloch({1, 0, 0});
    const DensityMatrix joint = premeasure_state(plus, PremeasurementSetup(computational_pvm()));
    const ComplexMatrix bell = ComplexMatrix::outer(ket_of({kInvSqrt2, 0.0, 0.0, kInvSqrt2}));
    CHECK(max_abs_diff(joint.matrix(), bell) < 1e-15);
    CHECK(joint.dims() == std::vector<std::size_t>{2, 2});
}

TEST_CASE("premeasurement preserves the Born weights") {
    SplitMix64 rng(22);
    for (int k = 0; k < 50; ++k) {
        const std::size_t d = 2 + k % 3;
        const DensityMatrix rho = random_density(d, 1 + k % d, rng);
        const PremeasurementSetup setup(pvm_from_observable(Observable(random_hermitian(d, rng))));
        const DensityMatrix joint = premeasure_state(rho, setup);
        const ComplexMatrix pointer = partial_trace(joint.matrix(), d, setup.apparatus_dim(), Subsystem::A);
        for (std::size_t i = 0; i < setup.apparatus_dim(); ++i) {
            const double born = trace_of_product(setup.pvm().projectors()[i], rho.matrix()).real();
            CHECK(std::abs(pointer(i, i).real() - born) < 1e-12);
        }
    }
}

TEST_CASE("premeasure_state rejects mismatched dimensions") {
    CHECK_THROWS_AS(premeasure_state(random_density(3, 3, 1), PremeasurementSetup(computational_pvm())), Error);
}

TEST_CASE("CNOT truth table") {
    const ComplexMatrix u = cnot_unitary();
    const ComplexMatrix k00 = ComplexMatrix::ket(4, 0), k01 = ComplexMatrix::ket(4, 1);
    const ComplexMatrix k10 = ComplexMatrix::ket(4, 2), k11 = ComplexMatrix::ket(4, 3);
    CHECK(u * k00 == k00);
    CHECK(u * k01 == k01);
    CHECK(u * k10 == k11);
    CHECK(u * k11 == k10);
    CHECK(u * u == ComplexMatrix::identity(4));
}

TEST_CASE("default Hamiltonian generates CNOT at t = tau") {
    for (double tau : {0.5, 1.0, 3.7}) {
        const HamiltonianModel model = default_measurement_hamiltonian(tau);
        CHECK(max_abs_diff(model.propagator(tau), cnot_unitary()) < 1e-12);
        CHECK(max_abs_diff(model.propagator(0.0), ComplexMatrix::identity(4)) < 1e-15);
    }
}

TEST_CASE("half-way evolution of |10>") {
    // The pointer flip is a rotation of the target; at tau/2 it is halfway.
    const HamiltonianModel model = default_measurement_hamiltonian(1.0);
    const DensityMatrix start = attach_apparatus(density_from_bloch({0, 0, -1}), 2);
    const DensityMatrix half = evolve_joint(start, model, 0.5);
    CHECK(half.matrix()(3, 3).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(half.matrix()(2, 2).real() == doctest::Approx(0.5).epsilon(1e-12));
    const DensityMatrix full = evolve_joint(start, model, 1.0);
    CHECK(full.matrix()(3, 3).real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("|0> on the system is left alone by the interaction") {
    const HamiltonianModel model = default_measurement_hamiltonian(2.0);
    const DensityMatrix start = attach_apparatus(density_from_bloch({0, 0, 1}), 2);
    for (double t : {0.3, 1.0, 2.0, 5.0}) {
        CHECK(max_abs_diff(evolve_joint(start, model, t).matrix(), start.matrix()) < 1e-12);
    }
}

TEST_CASE("zero interaction keeps product states") {
    const HamiltonianModel model{Observable(pauli_z()), Observable(ComplexMatrix(2)), Observable(ComplexMatrix(4)), 1.0};
    const DensityMatrix start = attach_apparatus(density_from_bloch({0.3, 0.1, 0.5}), 2);
    const DensityMatrix after = evolve_joint(start, model, 0.7);
    const ComplexMatrix a = partial_trace(after.matrix(), 2, 2, Subsystem::B);
    const ComplexMatrix b = partial_trace(after.matrix(), 2, 2, Subsystem::A);
    CHECK(max_abs_diff(after.matrix(), kron(a, b)) < 1e-12);
    CHECK(max_abs_diff(b, ComplexMatrix::basis_projector(2, 0)) < 1e-12);
}

TEST_CASE("dynamic and isometric routes agree") {
    SplitMix64 rng(23);
    const HamiltonianModel model = default_measurement_hamiltonian(1.0);
    const PremeasurementSetup setup(computational_pvm());
    for (int k = 0; k < 100; ++k) {
        const DensityMatrix rho = random_density(2, 1 + k % 2, rng);
        const DensityMatrix dynamic = evolve_joint(attach_apparatus(rho, 2), model, model.tau);
        CHECK(max_abs_diff(dynamic.matrix(), premeasure_state(rho, setup).matrix()) < 1e-10);
    }
}

TEST_CASE("Hamiltonian model validation") {
    auto code = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InternalConsistency;
    };
    CHECK(code([] { default_measurement_hamiltonian(0.0); }) == ErrorCode::NonpositiveDuration);
    CHECK(code([] { default_measurement_hamiltonian(-1.0); }) == ErrorCode::NonpositiveDuration);
    CHECK(code([] { default_measurement_hamiltonian(std::nan("")); }) == ErrorCode::NonpositiveDuration);

    const HamiltonianModel bad{Observable(pauli_z()), Observable(pauli_z()), Observable(ComplexMatrix(3)), 1.0};
    CHECK(code([&] { bad.validate(); }) == ErrorCode::DimensionMismatch);

    const HamiltonianModel model = default_measurement_hamiltonian(1.0);
    CHECK(code([&] { evolve_joint(random_density(4, 4, 5), model, 1.0); }) == ErrorCode::DimensionMismatch);
}
