#include "skewent/premeasure.hpp"

#include <numbers>
#include <string>

#include "skewent/error.hpp"
#include "skewent/linalg.hpp"

namespace skewent {

ComplexMatrix premeasurement_isometry(const PremeasurementSetup& setup) {
    const std::size_t k_count = setup.apparatus_dim();
    ComplexMatrix v(setup.joint_dim(), setup.system_dim());
    for (std::size_t k = 0; k < k_count; ++k) {
        v += kron(setup.pvm().projectors()[k], ComplexMatrix::ket(k_count, k));
    }
    return v;
}

DensityMatrix premeasure_state(const DensityMatrix& rho_in, const PremeasurementSetup& setup) {
    if (rho_in.dim() != setup.system_dim()) {
        throw Error(ErrorCode::DimensionMismatch, "state dimension " + std::to_string(rho_in.dim()) +
                                                      " vs PVM dimension " + std::to_string(setup.system_dim()));
    }
    const ComplexMatrix v = premeasurement_isometry(setup);
    ComplexMatrix joint = v * rho_in.matrix() * v.adjoint();
    return DensityMatrix(joint.hermitian_part(), {setup.system_dim(), setup.apparatus_dim()});
}

ComplexMatrix cnot_unitary() {
    return {{1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, 1.0, 0.0}};
}

void HamiltonianModel::validate() const {
    if (interaction.dim() != system_dim() * apparatus_dim()) {
        throw Error(ErrorCode::DimensionMismatch, "interaction Hamiltonian does not act on system (x) apparatus");
    }
    if (!(tau > 0.0)) throw Error(ErrorCode::NonpositiveDuration, "tau = " + std::to_string(tau));
}

ComplexMatrix HamiltonianModel::total() const {
    validate();
    return kron(system.matrix(), ComplexMatrix::identity(apparatus_dim())) +
           kron(ComplexMatrix::identity(system_dim()), apparatus.matrix()) + interaction.matrix();
}

ComplexMatrix HamiltonianModel::propagator(double t) const { return matrix_exp_antihermitian(total(), t); }

HamiltonianModel default_measurement_hamiltonian(double tau) {
    if (!(tau > 0.0)) throw Error(ErrorCode::NonpositiveDuration, "tau = " + std::to_string(tau));
    const ComplexMatrix flip_generator = ComplexMatrix::identity(2) - pauli_x();
    ComplexMatrix h_int = kron(ComplexMatrix::basis_projector(2, 1), flip_generator);
    h_int *= std::numbers::pi / (2.0 * tau);
    return HamiltonianModel{Observable(ComplexMatrix(2)), Observable(ComplexMatrix(2)), Observable(h_int), tau};
}

DensityMatrix evolve_joint(const DensityMatrix& rho0, const HamiltonianModel& model, double t) {
    model.validate();
    const auto& dims = rho0.dims();
    if (dims.size() != 2 || dims[0] != model.system_dim() || dims[1] != model.apparatus_dim()) {
        throw Error(ErrorCode::DimensionMismatch, "joint state dimensions do not match the Hamiltonian model");
    }
    if (!(t >= 0.0)) throw Error(ErrorCode::OutOfRange, "evolution time must be nonnegative");
    const ComplexMatrix u = model.propagator(t);
    ComplexMatrix rho = u * rho0.matrix() * u.adjoint();
    return DensityMatrix(rho.hermitian_part(), dims);
}

DensityMatrix attach_apparatus(const DensityMatrix& rho_in, std::size_t apparatus_dim) {
    return rho_in.tensor(DensityMatrix(ComplexMatrix::basis_projector(apparatus_dim, 0)));
}

}  // namespace skewent
