#include "skewent/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

#include "skewent/error.hpp"

namespace skewent {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::InvalidState: return "InvalidState";
        case ErrorCode::BlochOutOfBall: return "BlochOutOfBall";
        case ErrorCode::BadRank: return "BadRank";
        case ErrorCode::InvalidPVM: return "InvalidPVM";
        case ErrorCode::NonpositiveDuration: return "NonpositiveDuration";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::InconsistentInputs: return "InconsistentInputs";
        case ErrorCode::NotUnitDirection: return "NotUnitDirection";
        case ErrorCode::InternalConsistency: return "InternalConsistency";
    }
    return "Unknown";
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cplx>& diag) {
    ComplexMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& diag) {
    ComplexMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

ComplexMatrix ComplexMatrix::basis_projector(std::size_t dim, std::size_t k) {
    if (k >= dim) throw Error(ErrorCode::OutOfRange, "basis index beyond dimension");
    ComplexMatrix m(dim);
    m(k, k) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::ket(std::size_t dim, std::size_t k) {
    if (k >= dim) throw Error(ErrorCode::OutOfRange, "basis index beyond dimension");
    ComplexMatrix v(dim, 1);
    v(k, 0) = 1.0;
    return v;
}

ComplexMatrix ComplexMatrix::outer(const ComplexMatrix& v) {
    if (v.cols() != 1) throw Error(ErrorCode::DimensionMismatch, "outer() expects a column vector");
    ComplexMatrix m(v.rows());
    for (std::size_t i = 0; i < v.rows(); ++i)
        for (std::size_t j = 0; j < v.rows(); ++j) m(i, j) = v(i, 0) * std::conj(v(j, 0));
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix r = *this;
    for (auto& z : r.data_) z = std::conj(z);
    return r;
}

ComplexMatrix ComplexMatrix::column(std::size_t j) const {
    if (j >= cols_) throw Error(ErrorCode::OutOfRange, "column index");
    ComplexMatrix v(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) v(i, 0) = (*this)(i, j);
    return v;
}

cplx ComplexMatrix::trace() const {
    if (!is_square()) throw Error(ErrorCode::NotSquare, "trace of a non-square matrix");
    cplx t{0.0, 0.0};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const cplx& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

double ComplexMatrix::hermiticity_defect() const {
    if (!is_square()) return std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
}

ComplexMatrix ComplexMatrix::hermitian_part() const {
    if (!is_square()) throw Error(ErrorCode::NotSquare, "hermitian_part of a non-square matrix");
    ComplexMatrix r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
    return r;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& z : data_) z *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
    ComplexMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::DimensionMismatch, "max_abs_diff shapes differ");
    double m = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k) m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
    return m;
}

cplx trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols())
        throw Error(ErrorCode::DimensionMismatch, "trace_of_product shapes");
    cplx t{0.0, 0.0};
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) t += a(i, k) * b(k, i);
    return t;
}

std::ostream& operator<<(std::ostream& os, const ComplexMatrix& m) {
    const auto flags = os.flags();
    const auto prec = os.precision();
    os << std::fixed << std::setprecision(6);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const cplx z = m(i, j);
            os << (j ? "  " : " ") << std::setw(9) << z.real() << (z.imag() < 0 ? " - " : " + ")
               << std::setw(8) << std::abs(z.imag()) << "i";
        }
        os << " ]\n";
    }
    os.flags(flags);
    os.precision(prec);
    return os;
}

}  // namespace skewent
