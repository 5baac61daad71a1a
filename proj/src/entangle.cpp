#include "skewent/entangle.hpp"

#include <cmath>
#include <string>

#include "skewent/error.hpp"
#include "skewent/linalg.hpp"

namespace skewent {

namespace {

std::pair<std::size_t, std::size_t> bipartition(const DensityMatrix& rho) {
    if (rho.dims().size() != 2) {
        throw Error(ErrorCode::DimensionMismatch, "state has " + std::to_string(rho.dims().size()) +
                                                      " recorded factors; pass dim_a and dim_b explicitly");
    }
    return {rho.dims()[0], rho.dims()[1]};
}

}  // namespace

double negativity(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b, const NumericSettings& s) {
    const ComplexMatrix pt = partial_transpose(rho.matrix(), dim_a, dim_b, Subsystem::A);
    const double value = 0.5 * (trace_norm(pt, s) - 1.0);
    if (value >= 0.0) return value;
    if (value >= -s.scalar_clamp) return 0.0;
    throw Error(ErrorCode::InternalConsistency, "trace norm of a unit-trace operator below 1");
}

double negative_eigenvalue_sum(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                               const NumericSettings& s) {
    const ComplexMatrix pt = partial_transpose(rho.matrix(), dim_a, dim_b, Subsystem::A);
    double sum = 0.0;
    for (double lambda : hermitian_eig(pt, s).values) {
        if (lambda < -s.zero_eigenvalue) sum -= lambda;
    }
    return sum;
}

double negativity(const DensityMatrix& rho, const NumericSettings& s) {
    const auto [a, b] = bipartition(rho);
    return negativity(rho, a, b, s);
}

double negative_eigenvalue_sum(const DensityMatrix& rho, const NumericSettings& s) {
    const auto [a, b] = bipartition(rho);
    return negative_eigenvalue_sum(rho, a, b, s);
}

}  // namespace skewent
