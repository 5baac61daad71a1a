#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace skewent {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major.
///
/// States, observables and unitaries are square. The premeasurement isometry
/// (dS*K x dS) and ket columns are the only rectangular instances, so the
/// type allows rows != cols and the square-only operations check for it.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    explicit ComplexMatrix(std::size_t dim) : ComplexMatrix(dim, dim) {}

    /// Row-wise literal: {{a, b}, {c, d}}. All rows must have equal length.
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static ComplexMatrix diagonal(const std::vector<cplx>& diag);
    static ComplexMatrix diagonal(const std::vector<double>& diag);
    /// |k><k| on a dim-dimensional space.
    static ComplexMatrix basis_projector(std::size_t dim, std::size_t k);
    /// Column vector |k>.
    static ComplexMatrix ket(std::size_t dim, std::size_t k);
    /// |v><v| for a column vector v.
    static ComplexMatrix outer(const ComplexMatrix& v);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    /// Side length; only meaningful for square matrices.
    std::size_t dim() const noexcept { return rows_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<cplx>& data() const noexcept { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;
    ComplexMatrix column(std::size_t j) const;

    cplx trace() const;
    double max_abs() const;
    double frobenius_norm() const;
    bool all_finite() const;
    /// max |M_ij - conj(M_ji)|; +inf when not square.
    double hermiticity_defect() const;
    bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }
    /// (M + M^dagger) / 2
    ComplexMatrix hermitian_part() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx s);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(ComplexMatrix m, cplx s) { return m *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix m) { return m *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

/// max_ij |A_ij - B_ij|; throws DimensionMismatch on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr(A B) without forming the product.
cplx trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

std::ostream& operator<<(std::ostream& os, const ComplexMatrix& m);

}  // namespace skewent
