#include "skewent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "skewent/error.hpp"

namespace skewent {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
    if (!m.is_square() || m.rows() == 0) throw Error(ErrorCode::NotSquare, what);
}

void require_hermitian(const ComplexMatrix& m, const NumericSettings& s, const char* what) {
    require_square(m, what);
    if (!m.all_finite()) throw Error(ErrorCode::NonFinite, what);
    const double defect = m.hermiticity_defect();
    if (defect > s.hermitian_tol) {
        throw Error(ErrorCode::NotHermitian, std::string(what) + " (defect " + std::to_string(defect) + ")");
    }
}

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Applies A <- G^dagger A G and V <- V G, where G is the identity except on
// the (p, q) block.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q, cplx gpp, cplx gpq, cplx gqp,
            cplx gqq) {
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const cplx akp = a(k, p);
        const cplx akq = a(k, q);
        a(k, p) = akp * gpp + akq * gqp;
        a(k, q) = akp * gpq + akq * gqq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const cplx apk = a(p, k);
        const cplx aqk = a(q, k);
        a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
        a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const cplx vkp = v(k, p);
        const cplx vkq = v(k, q);
        v(k, p) = vkp * gpp + vkq * gqp;
        v(k, q) = vkp * gpq + vkq * gqq;
    }
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& m, const NumericSettings& s) {
    require_hermitian(m, s, "hermitian_eig");
    const std::size_t n = m.rows();

    ComplexMatrix a = m.hermitian_part();
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double threshold = s.jacobi_rel_tol * a.frobenius_norm();

    bool converged = false;
    for (int sweep = 0; sweep <= s.jacobi_max_sweeps; ++sweep) {
        if (off_diagonal_norm(a) <= threshold) {
            converged = true;
            break;
        }
        if (sweep == s.jacobi_max_sweeps) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // Rotation angle for the real symmetric block [[app, mag], [mag, aqq]].
                const double theta = (aqq - app) / (2.0 * mag);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                const cplx phase = std::conj(apq) / mag;  // e^{-i arg a_pq}
                rotate(a, v, p, q, c, sn, -sn * phase, c * phase);
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }
    if (!converged) {
        throw Error(ErrorCode::NoConvergence,
                    "Jacobi exceeded " + std::to_string(s.jacobi_max_sweeps) + " sweeps");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n);
    for (std::size_t c = 0; c < n; ++c) {
        out.values[c] = a(order[c], order[c]).real();
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
    }
    return out;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m, const NumericSettings& s) {
    const EigenDecomposition eig = hermitian_eig(m, s);
    if (eig.values.front() < -s.psd_floor) {
        throw Error(ErrorCode::NotPositiveSemidefinite,
                    "minimum eigenvalue " + std::to_string(eig.values.front()));
    }
    // Eigenvalues at roundoff level are zero; their square roots (~1e-8) would
    // otherwise dominate the error for rank-deficient inputs.
    double scale = 0.0;
    for (double x : eig.values) scale = std::max(scale, std::abs(x));
    const double noise = 16.0 * static_cast<double>(m.dim()) * std::numeric_limits<double>::epsilon() * scale;
    return eig.apply([noise](double x) { return cplx{x <= noise ? 0.0 : std::sqrt(x), 0.0}; });
}

ComplexMatrix matrix_exp_antihermitian(const ComplexMatrix& h, double t, const NumericSettings& s) {
    const EigenDecomposition eig = hermitian_eig(h, s);
    return eig.apply([t](double x) { return std::polar(1.0, -t * x); });
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

namespace {

void require_bipartite(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b, const char* what) {
    if (!m.is_square() || dim_a == 0 || dim_b == 0 || m.rows() != dim_a * dim_b) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(what) + ": " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                        " is not " + std::to_string(dim_a) + "*" + std::to_string(dim_b));
    }
}

}  // namespace

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b, Subsystem which) {
    require_bipartite(m, dim_a, dim_b, "partial_transpose");
    ComplexMatrix r(m.rows());
    for (std::size_t i = 0; i < dim_a; ++i)
        for (std::size_t k = 0; k < dim_b; ++k)
            for (std::size_t j = 0; j < dim_a; ++j)
                for (std::size_t l = 0; l < dim_b; ++l) {
                    const cplx x = m(i * dim_b + k, j * dim_b + l);
                    if (which == Subsystem::A)
                        r(j * dim_b + k, i * dim_b + l) = x;
                    else
                        r(i * dim_b + l, j * dim_b + k) = x;
                }
    return r;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b, Subsystem traced) {
    require_bipartite(m, dim_a, dim_b, "partial_trace");
    if (traced == Subsystem::B) {
        ComplexMatrix r(dim_a);
        for (std::size_t i = 0; i < dim_a; ++i)
            for (std::size_t j = 0; j < dim_a; ++j)
                for (std::size_t k = 0; k < dim_b; ++k) r(i, j) += m(i * dim_b + k, j * dim_b + k);
        return r;
    }
    ComplexMatrix r(dim_b);
    for (std::size_t k = 0; k < dim_b; ++k)
        for (std::size_t l = 0; l < dim_b; ++l)
            for (std::size_t i = 0; i < dim_a; ++i) r(k, l) += m(i * dim_b + k, i * dim_b + l);
    return r;
}

double trace_norm(const ComplexMatrix& m, const NumericSettings& s) {
    const EigenDecomposition eig = hermitian_eig(m, s);
    double sum = 0.0;
    for (double x : eig.values) sum += std::abs(x);
    return sum;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::DimensionMismatch, "commutator");
    return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::DimensionMismatch, "anticommutator");
    return a * b + b * a;
}

}  // namespace skewent
