#include "skewent/rng.hpp"

#include <cmath>
#include <numbers>

#include "skewent/linalg.hpp"

namespace skewent {

double SplitMix64::gaussian() noexcept {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

cplx SplitMix64::complex_gaussian() noexcept {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
}

ComplexMatrix random_hermitian(std::size_t dim, SplitMix64& rng) {
    ComplexMatrix g(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) g(i, j) = rng.complex_gaussian();
    return g.hermitian_part();
}

ComplexMatrix random_unitary(std::size_t dim, SplitMix64& rng) {
    return hermitian_eig(random_hermitian(dim, rng)).vectors;
}

}  // namespace skewent
