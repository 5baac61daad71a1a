#pragma once

// Reference computations used only by the tests. None of these route through
// the eigensolver, so they check it rather than restate it.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "skewent/matrix.hpp"

namespace oracle {

using skewent::ComplexMatrix;
using skewent::cplx;

/// Coefficients c_0..c_n of det(lambda I - A) = sum_k c_k lambda^k, via
/// Faddeev-LeVerrier.
inline std::vector<cplx> charpoly(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<cplx> c(n + 1);
    c[n] = 1.0;
    ComplexMatrix m(n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m + ComplexMatrix::identity(n) * c[n - k + 1];
        c[n - k] = -(a * m).trace() / static_cast<double>(k);
    }
    return c;
}

/// Durand-Kerner iteration followed by Newton polishing; real parts sorted.
inline std::vector<double> charpoly_real_roots(const ComplexMatrix& a) {
    const std::vector<cplx> c = charpoly(a);
    const std::size_t n = c.size() - 1;
    auto eval = [&](cplx z) {
        cplx v = c[n];
        for (std::size_t k = n; k-- > 0;) v = v * z + c[k];
        return v;
    };
    auto deriv = [&](cplx z) {
        cplx v = c[n] * static_cast<double>(n);
        for (std::size_t k = n - 1; k >= 1; --k) v = v * z + c[k] * static_cast<double>(k);
        return v;
    };
    std::vector<cplx> z(n);
    const cplx seed{0.4, 0.9};
    const double radius = 1.0 + a.frobenius_norm();
    for (std::size_t k = 0; k < n; ++k) z[k] = radius * std::pow(seed, static_cast<double>(k));
    for (int it = 0; it < 500; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            cplx denom = 1.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) denom *= z[i] - z[j];
            z[i] -= eval(z[i]) / denom;
        }
    }
    std::vector<double> roots;
    for (auto r : z) {
        for (int it = 0; it < 5; ++it) {
            const cplx d = deriv(r);
            if (std::abs(d) > 1e-300) r -= eval(r) / d;
        }
        roots.push_back(r.real());
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// sum_k A^k / k!, truncated once terms stop contributing.
inline ComplexMatrix exp_series(const ComplexMatrix& a) {
    ComplexMatrix sum = ComplexMatrix::identity(a.dim());
    ComplexMatrix term = ComplexMatrix::identity(a.dim());
    for (int k = 1; k < 200; ++k) {
        term = term * a * (1.0 / k);
        sum += term;
        if (term.max_abs() < 1e-18 * std::max(1.0, sum.max_abs())) break;
    }
    return sum;
}

/// Square root of a 2x2 positive semidefinite matrix by Cayley-Hamilton:
/// sqrt(A) = (A + sqrt(det A) I) / sqrt(Tr A + 2 sqrt(det A)).
inline ComplexMatrix sqrt_2x2(const ComplexMatrix& a) {
    const double det = std::max(0.0, (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)).real());
    const double s = std::sqrt(det);
    const double t = std::sqrt(a.trace().real() + 2.0 * s);
    return (a + ComplexMatrix::identity(2) * s) * (1.0 / t);
}

}  // namespace oracle
