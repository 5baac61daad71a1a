#pragma once

#include "skewent/settings.hpp"
#include "skewent/states.hpp"

namespace skewent {

// Closed-form qubit results for a sigma_z premeasurement (CNOT coupling to a
// qubit pointer), and the numeric pipeline they are checked against.

/// (1 - sqrt(1 - |n|^2)) (n_x^2 + n_y^2). Throws BlochOutOfBall.
///
/// This is the expression the closed-form negativity below is built on. It is
/// |n|^2 times the actual skew information of the state (see the spherical
/// form), so the two agree only for pure states or sigma_z eigenstates.
double skew_closed_form_cartesian(const BlochVector& b, const NumericSettings& s = kDefaultSettings);

/// Same expression with |n| supplied by the caller. sqrt(1 - |n|^2) is
/// ill-conditioned near the pure-state surface (a 1e-16 error in |n|^2 becomes
/// 1e-8), so grid code that knows the length exactly passes it here.
double skew_closed_form_cartesian(const BlochVector& b, double length, const NumericSettings& s = kDefaultSettings);

/// (1 - sqrt(1 - n^2)) sin^2(theta); independent of phi. Equals
/// skew_information(density_from_bloch(b), sigma_z).
double skew_closed_form_spherical(const SphericalBloch& sph);

/// (1 - n^2) / 2. Throws OutOfRange outside [0, 1].
double mixedness_closed_form(double n, const NumericSettings& s = kDefaultSettings);

/// Negativity of the premeasured qubit from its skew information and
/// mixedness: (1 - sqrt(2M))^(-1/2) sqrt(I) / 2.
///
/// The prefactor diverges as n -> 0 while I -> 0 faster, so the limit is 0;
/// inputs with n <= n_floor return exactly 0. Throws InconsistentInputs when
/// 2M > 1 beyond tolerance or the skew is negative beyond the clamp window.
double negativity_closed_form(double skew, double mixedness, double n,
                              const NumericSettings& s = kDefaultSettings);

/// 1/2 sqrt(I (1 + sqrt(2M))) with I the skew information of the state itself
/// (commutator definition) and M its mixedness. Follows from I = (1 - sqrt(1-n^2))
/// sin^2(theta), 2M = 1 - n^2 and negativity = n sin(theta) / 2, and holds at
/// n = 0 without special-casing. Throws InconsistentInputs like
/// negativity_closed_form.
double negativity_from_skew_information(double skew, double mixedness, const NumericSettings& s = kDefaultSettings);

/// 1/2 sqrt(|n|^2 - (n.m)^2): the closed form for a measurement along an
/// arbitrary unit direction m. Only validated numerically (rotate the PVM,
/// premeasure, take the negativity); see numeric_negativity_along().
double negativity_geometric(const BlochVector& b, const BlochVector& m, const NumericSettings& s = kDefaultSettings);

/// Explicit 4x4 premeasurement state for the CNOT interaction:
/// (1+n_z)/2 |00><00| + (1-n_z)/2 |11><11| + (n_x + i n_y)/2 |11><00| + h.c.
DensityMatrix premeasurement_state_explicit(const BlochVector& b, const NumericSettings& s = kDefaultSettings);

/// Numeric pipeline: rho(b), PVM of m.sigma, premeasure, negativity.
double numeric_negativity_along(const BlochVector& b, const BlochVector& m);

/// One grid point of the (n, theta, phi) scan with both evaluation routes.
struct QubitScanPoint {
    double n = 0.0;
    double theta = 0.0;
    double phi = 0.0;
    double skew_closed = 0.0;
    double skew_numeric = 0.0;
    double mixedness = 0.0;  // numeric Tr rho - Tr rho^2
    double negativity_closed = 0.0;
    double negativity_numeric = 0.0;

    double abs_diff() const;
};

/// Closed route: Cartesian skew expression and closed mixedness fed to
/// negativity_closed_form. Numeric route: Bloch state, sigma_z PVM
/// premeasurement, partial-transpose negativity.
QubitScanPoint evaluate_scan_point(const SphericalBloch& sph);

}  // namespace skewent
