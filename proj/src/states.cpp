#include "skewent/states.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "skewent/error.hpp"
#include "skewent/linalg.hpp"

namespace skewent {

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix pauli_y() { return {{0.0, cplx{0.0, -1.0}}, {cplx{0.0, 1.0}, 0.0}}; }
ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : DensityMatrix(matrix, {matrix.rows()}) {}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> dims, const NumericSettings& s)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
    if (!matrix_.is_square() || matrix_.rows() == 0) throw Error(ErrorCode::NotSquare, "density matrix");
    const std::size_t prod =
        std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
    if (dims_.empty() || prod != matrix_.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "subsystem dimensions do not multiply to matrix size");
    }
    if (!matrix_.all_finite()) throw Error(ErrorCode::NonFinite, "density matrix");
    if (!matrix_.is_hermitian(s.hermitian_tol)) throw Error(ErrorCode::InvalidState, "density matrix not Hermitian");
    const cplx tr = matrix_.trace();
    if (std::abs(tr - 1.0) > s.trace_tol) {
        throw Error(ErrorCode::InvalidState, "trace " + std::to_string(tr.real()) + " != 1");
    }
    const double min_eig = hermitian_eig(matrix_, s).values.front();
    if (min_eig < -s.psd_floor) {
        throw Error(ErrorCode::InvalidState, "negative eigenvalue " + std::to_string(min_eig));
    }
}

DensityMatrix DensityMatrix::tensor(const DensityMatrix& other) const {
    std::vector<std::size_t> dims = dims_;
    dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
    return DensityMatrix(kron(matrix_, other.matrix_), std::move(dims));
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

Observable::Observable(ComplexMatrix matrix, const NumericSettings& s) : matrix_(std::move(matrix)) {
    if (!matrix_.is_square() || matrix_.rows() == 0) throw Error(ErrorCode::NotSquare, "observable");
    if (!matrix_.is_hermitian(s.hermitian_tol)) throw Error(ErrorCode::NotHermitian, "observable");
}

Observable Observable::spin_along(const BlochVector& n) {
    return Observable(pauli_x() * n.x + pauli_y() * n.y + pauli_z() * n.z);
}

double PVM::defect(const std::vector<ComplexMatrix>& projectors) {
    const std::size_t d = projectors.front().rows();
    double worst = 0.0;
    ComplexMatrix sum(d);
    for (std::size_t j = 0; j < projectors.size(); ++j) {
        const ComplexMatrix& p = projectors[j];
        worst = std::max(worst, max_abs_diff(p * p, p));
        worst = std::max(worst, p.hermiticity_defect());
        for (std::size_t k = j + 1; k < projectors.size(); ++k) worst = std::max(worst, (p * projectors[k]).max_abs());
        sum += p;
    }
    return std::max(worst, max_abs_diff(sum, ComplexMatrix::identity(d)));
}

PVM::PVM(std::vector<ComplexMatrix> projectors, const NumericSettings& s) : projectors_(std::move(projectors)) {
    if (projectors_.empty()) throw Error(ErrorCode::InvalidPVM, "no projectors");
    const std::size_t d = projectors_.front().rows();
    for (const auto& p : projectors_) {
        if (!p.is_square() || p.rows() != d || d == 0)
            throw Error(ErrorCode::InvalidPVM, "projectors must share one square shape");
    }
    const double err = defect(projectors_);
    if (!(err <= s.projector_tol)) {
        throw Error(ErrorCode::InvalidPVM, "projector defect " + std::to_string(err));
    }
}

PVM computational_pvm(std::size_t dim) {
    std::vector<ComplexMatrix> ps;
    for (std::size_t k = 0; k < dim; ++k) ps.push_back(ComplexMatrix::basis_projector(dim, k));
    return PVM(std::move(ps));
}

DensityMatrix density_from_bloch(const BlochVector& b, const NumericSettings& s) {
    const double len = b.norm();
    if (!(len <= 1.0 + s.bloch_slack)) {
        throw Error(ErrorCode::BlochOutOfBall, "|n| = " + std::to_string(len));
    }
    ComplexMatrix rho = {{0.5 * (1.0 + b.z), 0.5 * cplx{b.x, -b.y}}, {0.5 * cplx{b.x, b.y}, 0.5 * (1.0 - b.z)}};
    return DensityMatrix(std::move(rho), {2}, s);
}

BlochVector bloch_from_density(const DensityMatrix& rho) {
    if (rho.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "Bloch vector needs a 2x2 state");
    const ComplexMatrix& m = rho.matrix();
    return {trace_of_product(m, pauli_x()).real(), trace_of_product(m, pauli_y()).real(),
            trace_of_product(m, pauli_z()).real()};
}

BlochVector spherical_to_cartesian(const SphericalBloch& sph) {
    const double st = std::sin(sph.theta);
    return {sph.n * st * std::cos(sph.phi), sph.n * st * std::sin(sph.phi), sph.n * std::cos(sph.theta)};
}

PVM pvm_from_observable(const Observable& x, const NumericSettings& s) {
    const EigenDecomposition eig = hermitian_eig(x.matrix(), s);
    const std::size_t d = eig.values.size();

    std::vector<ComplexMatrix> projectors;
    // Walk eigenvalues from the top so outcome 0 is the largest eigenvalue.
    std::size_t k = d;
    while (k > 0) {
        ComplexMatrix p(d);
        double prev = eig.values[k - 1];
        do {
            const ComplexMatrix v = eig.vectors.column(k - 1);
            p += ComplexMatrix::outer(v);
            prev = eig.values[k - 1];
            --k;
        } while (k > 0 && prev - eig.values[k - 1] <= s.degeneracy_tol);
        projectors.push_back(std::move(p));
    }
    return PVM(std::move(projectors), s);
}

DensityMatrix random_density(std::size_t dim, std::size_t rank, SplitMix64& rng) {
    if (dim == 0 || rank == 0 || rank > dim) {
        throw Error(ErrorCode::BadRank, "rank " + std::to_string(rank) + " for dim " + std::to_string(dim));
    }
    ComplexMatrix g(dim, rank);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < rank; ++j) g(i, j) = rng.complex_gaussian();
    ComplexMatrix rho = g * g.adjoint();
    rho *= 1.0 / rho.trace().real();
    return DensityMatrix(rho.hermitian_part());
}

DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return random_density(dim, rank, rng);
}

}  // namespace skewent
