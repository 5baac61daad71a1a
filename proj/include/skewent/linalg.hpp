#pragma once

#include <cstddef>
#include <vector>

#include "skewent/matrix.hpp"
#include "skewent/settings.hpp"

namespace skewent {

/// Eigenpairs of a Hermitian matrix. Eigenvalues ascending; column j of
/// `vectors` is the eigenvector for `values[j]`.
struct EigenDecomposition {
    std::vector<double> values;
    ComplexMatrix vectors;

    /// V diag(f(lambda)) V^dagger
    template <class F>
    ComplexMatrix apply(F&& f) const {
        const std::size_t n = values.size();
        std::vector<cplx> fv(n);
        for (std::size_t k = 0; k < n; ++k) fv[k] = f(values[k]);
        ComplexMatrix r(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                cplx s{0.0, 0.0};
                for (std::size_t k = 0; k < n; ++k) s += vectors(i, k) * fv[k] * std::conj(vectors(j, k));
                r(i, j) = s;
            }
        return r;
    }

    ComplexMatrix reconstruct() const {
        return apply([](double x) { return cplx{x, 0.0}; });
    }
};

/// Which tensor factor of a bipartite operator an operation acts on.
enum class Subsystem { A, B };

/// Cyclic complex Jacobi eigensolver.
///
/// Each rotation removes the phase of the pivot a_pq and then applies a real
/// Givens rotation, so the accumulated transform stays unitary. Iterates until
/// the off-diagonal Frobenius norm drops below jacobi_rel_tol * |M|_F.
/// Throws NotHermitian, NonFinite, NotSquare or NoConvergence.
EigenDecomposition hermitian_eig(const ComplexMatrix& m, const NumericSettings& s = kDefaultSettings);

/// Principal square root of a positive semidefinite matrix. Eigenvalues in
/// [-psd_floor, 0) are clamped to zero, as are positive eigenvalues at the
/// roundoff floor 16 * dim * eps * max|lambda|; anything below -psd_floor
/// throws NotPositiveSemidefinite.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m, const NumericSettings& s = kDefaultSettings);

/// exp(-i t H) for Hermitian H (hbar = 1), computed spectrally.
ComplexMatrix matrix_exp_antihermitian(const ComplexMatrix& h, double t,
                                       const NumericSettings& s = kDefaultSettings);

/// Kronecker product with the first factor as the slow index:
/// (A (x) B)[i*rB + k, j*cB + l] = A[i,j] B[k,l]. Accepts rectangular factors.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b, Subsystem which);

/// Traces out `traced`, returning the operator on the other factor.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b, Subsystem traced);

/// Sum of |eigenvalues|; Hermitian input only.
double trace_norm(const ComplexMatrix& m, const NumericSettings& s = kDefaultSettings);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace skewent
