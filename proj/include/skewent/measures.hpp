#pragma once

#include "skewent/settings.hpp"
#include "skewent/states.hpp"

namespace skewent {

// Scalar outputs that come out in [-scalar_clamp, 0) are reported as 0. More
// negative values indicate a numerical fault and throw InternalConsistency.

/// Wigner-Yanase skew information -1/2 Tr([sqrt(rho), X]^2).
double skew_information(const DensityMatrix& rho, const Observable& x, const NumericSettings& s = kDefaultSettings);

/// Same quantity as Tr(rho X^2) - Tr(sqrt(rho) X sqrt(rho) X). Kept as a
/// separate evaluation path for cross-checking.
double skew_information_rewritten(const DensityMatrix& rho, const Observable& x,
                                  const NumericSettings& s = kDefaultSettings);

/// Tr rho - Tr rho^2.
double mixedness(const DensityMatrix& rho, const NumericSettings& s = kDefaultSettings);

/// Tr rho^2.
double purity(const DensityMatrix& rho);

/// Tr(rho X^2) - Tr(rho X)^2.
double variance(const DensityMatrix& rho, const Observable& x, const NumericSettings& s = kDefaultSettings);

}  // namespace skewent
