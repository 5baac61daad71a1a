#include "skewent/qubit_analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "skewent/entangle.hpp"
#include "skewent/error.hpp"
#include "skewent/measures.hpp"
#include "skewent/premeasure.hpp"

namespace skewent {

double skew_closed_form_cartesian(const BlochVector& b, const NumericSettings& s) {
    const double len2 = b.dot(b);
    if (!(len2 <= 1.0 + s.bloch_slack)) {
        throw Error(ErrorCode::BlochOutOfBall, "|n|^2 = " + std::to_string(len2));
    }
    return (1.0 - std::sqrt(std::max(0.0, 1.0 - len2))) * (b.x * b.x + b.y * b.y);
}

double skew_closed_form_cartesian(const BlochVector& b, double length, const NumericSettings& s) {
    if (!(length >= 0.0 && length <= 1.0 + s.bloch_slack)) {
        throw Error(ErrorCode::BlochOutOfBall, "|n| = " + std::to_string(length));
    }
    return (1.0 - std::sqrt(std::max(0.0, 1.0 - length * length))) * (b.x * b.x + b.y * b.y);
}

double skew_closed_form_spherical(const SphericalBloch& sph) {
    const double st = std::sin(sph.theta);
    return (1.0 - std::sqrt(std::max(0.0, 1.0 - sph.n * sph.n))) * st * st;
}

double mixedness_closed_form(double n, const NumericSettings& s) {
    if (!(n >= 0.0 && n <= 1.0 + s.bloch_slack)) {
        throw Error(ErrorCode::OutOfRange, "Bloch length " + std::to_string(n));
    }
    return 0.5 * std::max(0.0, 1.0 - n * n);
}

double negativity_closed_form(double skew, double mixedness, double n, const NumericSettings& s) {
    if (2.0 * mixedness > 1.0 + s.trace_tol) {
        throw Error(ErrorCode::InconsistentInputs, "2M = " + std::to_string(2.0 * mixedness) + " exceeds 1");
    }
    if (skew < -s.scalar_clamp || mixedness < -s.scalar_clamp) {
        throw Error(ErrorCode::InconsistentInputs, "negative skew or mixedness");
    }
    if (n <= s.n_floor) return 0.0;
    const double gap = 1.0 - std::sqrt(std::max(0.0, 2.0 * mixedness));
    if (!(gap > 0.0)) {
        throw Error(ErrorCode::InconsistentInputs, "mixedness of a completely mixed qubit with n > 0");
    }
    return std::sqrt(std::max(0.0, skew) / gap) / 2.0;
}

double negativity_from_skew_information(double skew, double mixedness, const NumericSettings& s) {
    if (2.0 * mixedness > 1.0 + s.trace_tol) {
        throw Error(ErrorCode::InconsistentInputs, "2M = " + std::to_string(2.0 * mixedness) + " exceeds 1");
    }
    if (skew < -s.scalar_clamp || mixedness < -s.scalar_clamp) {
        throw Error(ErrorCode::InconsistentInputs, "negative skew or mixedness");
    }
    return 0.5 * std::sqrt(std::max(0.0, skew) * (1.0 + std::sqrt(std::max(0.0, 2.0 * mixedness))));
}

double negativity_geometric(const BlochVector& b, const BlochVector& m, const NumericSettings& s) {
    if (std::abs(m.norm() - 1.0) > s.unit_tol) {
        throw Error(ErrorCode::NotUnitDirection, "|m| = " + std::to_string(m.norm()));
    }
    const double along = b.dot(m);
    return 0.5 * std::sqrt(std::max(0.0, b.dot(b) - along * along));
}

DensityMatrix premeasurement_state_explicit(const BlochVector& b, const NumericSettings& s) {
    if (!(b.norm() <= 1.0 + s.bloch_slack)) {
        throw Error(ErrorCode::BlochOutOfBall, "|n| = " + std::to_string(b.norm()));
    }
    ComplexMatrix m(4);
    m(0, 0) = 0.5 * (1.0 + b.z);
    m(3, 3) = 0.5 * (1.0 - b.z);
    m(3, 0) = 0.5 * cplx{b.x, b.y};
    m(0, 3) = 0.5 * cplx{b.x, -b.y};
    return DensityMatrix(std::move(m), {2, 2}, s);
}

double numeric_negativity_along(const BlochVector& b, const BlochVector& m) {
    const PremeasurementSetup setup(pvm_from_observable(Observable::spin_along(m)));
    return negativity(premeasure_state(density_from_bloch(b), setup));
}

double QubitScanPoint::abs_diff() const { return std::abs(negativity_closed - negativity_numeric); }

QubitScanPoint evaluate_scan_point(const SphericalBloch& sph) {
    QubitScanPoint p;
    p.n = sph.n;
    p.theta = sph.theta;
    p.phi = sph.phi;

    const BlochVector b = spherical_to_cartesian(sph);
    p.skew_closed = skew_closed_form_cartesian(b, sph.n);
    p.negativity_closed = negativity_closed_form(p.skew_closed, mixedness_closed_form(sph.n), sph.n);

    const DensityMatrix rho = density_from_bloch(b);
    p.skew_numeric = skew_information(rho, Observable(pauli_z()));
    p.mixedness = mixedness(rho);
    p.negativity_numeric = negativity(premeasure_state(rho, PremeasurementSetup(computational_pvm())));
    return p;
}

}  // namespace skewent
