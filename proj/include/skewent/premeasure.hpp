#pragma once

#include <cstddef>

#include "skewent/matrix.hpp"
#include "skewent/settings.hpp"
#include "skewent/states.hpp"

namespace skewent {

// Joint spaces are ordered system-first: H_S (x) H_M, so the joint basis index
// of |s>_S |m>_M is s * apparatus_dim + m. The apparatus starts in |0>_M.

/// A PVM on the system together with a pointer basis of one state per outcome.
class PremeasurementSetup {
public:
    explicit PremeasurementSetup(PVM pvm) : pvm_(std::move(pvm)) {}

    const PVM& pvm() const noexcept { return pvm_; }
    std::size_t system_dim() const noexcept { return pvm_.dim(); }
    std::size_t apparatus_dim() const noexcept { return pvm_.outcomes(); }
    std::size_t joint_dim() const noexcept { return system_dim() * apparatus_dim(); }

private:
    PVM pvm_;
};

/// V = sum_k X_k (x) |k>_M, a (dS*K) x dS isometry.
ComplexMatrix premeasurement_isometry(const PremeasurementSetup& setup);

/// V rho V^dagger on system (x) apparatus.
DensityMatrix premeasure_state(const DensityMatrix& rho_in, const PremeasurementSetup& setup);

/// Controlled-NOT, control = system, target = apparatus.
ComplexMatrix cnot_unitary();

/// H_tot = H_S (x) 1_M + 1_S (x) H_M + H_int, evolved for `tau` with hbar = 1.
struct HamiltonianModel {
    Observable system;       // H_S
    Observable apparatus;    // H_M
    Observable interaction;  // H_int on the joint space
    double tau = 1.0;

    std::size_t system_dim() const noexcept { return system.dim(); }
    std::size_t apparatus_dim() const noexcept { return apparatus.dim(); }

    /// Throws DimensionMismatch or NonpositiveDuration.
    void validate() const;
    ComplexMatrix total() const;
    /// exp(-i t H_tot)
    ComplexMatrix propagator(double t) const;
};

/// H_S = H_M = 0, H_int = pi/(2 tau) |1><1|_S (x) (1 - sigma_x)_M.
/// exp(-i tau H_int) equals cnot_unitary() exactly.
HamiltonianModel default_measurement_hamiltonian(double tau);

/// U(t) rho0 U(t)^dagger. rho0 must be a two-factor state matching the model.
DensityMatrix evolve_joint(const DensityMatrix& rho0, const HamiltonianModel& model, double t);

/// rho_in (x) |0><0|_M with apparatus dimension `apparatus_dim`.
DensityMatrix attach_apparatus(const DensityMatrix& rho_in, std::size_t apparatus_dim);

}  // namespace skewent
