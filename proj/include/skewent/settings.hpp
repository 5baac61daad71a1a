#pragma once

namespace skewent {

// Numeric thresholds shared by every module. Operations that depend on a
// threshold take a settings record, defaulting to kDefaultSettings.
struct NumericSettings {
    double hermitian_tol = 1e-12;      // max |M - M^dagger| entry
    double trace_tol = 1e-12;          // |Tr rho - 1|
    double psd_floor = 1e-10;          // eigenvalues in [-psd_floor, 0) clamp to 0
    double projector_tol = 1e-10;      // PVM idempotence / orthogonality / completeness
    double degeneracy_tol = 1e-9;      // eigenvalue grouping in pvm_from_observable
    double jacobi_rel_tol = 1e-13;     // off-diagonal Frobenius / |M|_F
    int jacobi_max_sweeps = 100;
    double scalar_clamp = 1e-10;       // scalar measures in [-scalar_clamp, 0) clamp to 0
    double zero_eigenvalue = 1e-11;    // |lambda| below this counts as zero for negativity
    double bloch_slack = 1e-12;        // |n| <= 1 + bloch_slack
    double unit_tol = 1e-12;           // | |m| - 1 | for measurement directions
    double n_floor = 1e-8;             // closed-form negativity returns 0 for n <= n_floor
};

inline constexpr NumericSettings kDefaultSettings{};

}  // namespace skewent
