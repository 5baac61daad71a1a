#pragma once

#include <cstddef>

#include "skewent/settings.hpp"
#include "skewent/states.hpp"

namespace skewent {

/// (|rho^{T_A}|_1 - 1) / 2, nonnegative convention.
double negativity(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                  const NumericSettings& s = kDefaultSettings);

/// sum of |lambda| over eigenvalues of rho^{T_A} below -zero_eigenvalue.
/// Evaluates the same quantity as negativity() by a separate route.
double negative_eigenvalue_sum(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                               const NumericSettings& s = kDefaultSettings);

/// Two-factor convenience overloads reading dims() from the state.
double negativity(const DensityMatrix& rho, const NumericSettings& s = kDefaultSettings);
double negative_eigenvalue_sum(const DensityMatrix& rho, const NumericSettings& s = kDefaultSettings);

}  // namespace skewent
