#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "skewent/matrix.hpp"
#include "skewent/rng.hpp"
#include "skewent/settings.hpp"

namespace skewent {

// Standard basis, |0> = (1,0), |1> = (0,1), sigma_y = [[0,-i],[i,0]].
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Positive semidefinite, unit-trace operator with recorded subsystem
/// dimensions. Construction validates; a DensityMatrix is always valid.
class DensityMatrix {
public:
    /// Single-system state; dims = {matrix.dim()}.
    explicit DensityMatrix(ComplexMatrix matrix);
    /// Composite state; the product of dims must equal matrix.dim().
    DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> dims,
                  const NumericSettings& s = kDefaultSettings);

    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    std::size_t dim() const noexcept { return matrix_.dim(); }

    /// Tensor product rho (x) sigma, dims concatenated.
    DensityMatrix tensor(const DensityMatrix& other) const;

private:
    ComplexMatrix matrix_;
    std::vector<std::size_t> dims_;
};

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
    double dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }
};

/// n in [0,1], theta in [0,pi], phi in [0,2pi); radians.
struct SphericalBloch {
    double n = 0.0;
    double theta = 0.0;
    double phi = 0.0;
};

/// Hermitian operator.
class Observable {
public:
    explicit Observable(ComplexMatrix matrix, const NumericSettings& s = kDefaultSettings);

    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    std::size_t dim() const noexcept { return matrix_.dim(); }

    /// n . sigma for a 3-vector n (not necessarily unit).
    static Observable spin_along(const BlochVector& n);

private:
    ComplexMatrix matrix_;
};

/// Projective measurement: orthogonal projectors summing to identity, one per
/// outcome, in outcome order.
class PVM {
public:
    explicit PVM(std::vector<ComplexMatrix> projectors, const NumericSettings& s = kDefaultSettings);

    const std::vector<ComplexMatrix>& projectors() const noexcept { return projectors_; }
    std::size_t outcomes() const noexcept { return projectors_.size(); }
    std::size_t dim() const noexcept { return projectors_.front().dim(); }

    /// Largest violation among idempotence, hermiticity, pairwise
    /// orthogonality and completeness (max-entry norm).
    static double defect(const std::vector<ComplexMatrix>& projectors);

private:
    std::vector<ComplexMatrix> projectors_;
};

/// The sigma_z measurement {|0><0|, |1><1|}.
PVM computational_pvm(std::size_t dim = 2);

DensityMatrix density_from_bloch(const BlochVector& b, const NumericSettings& s = kDefaultSettings);
BlochVector bloch_from_density(const DensityMatrix& rho);
BlochVector spherical_to_cartesian(const SphericalBloch& sph);

/// Spectral projectors of X. Eigenvalues within degeneracy_tol of their
/// neighbour share a projector; outcomes are ordered by descending eigenvalue,
/// so sigma_z yields {|0><0|, |1><1|}.
PVM pvm_from_observable(const Observable& x, const NumericSettings& s = kDefaultSettings);

/// G G^dagger / Tr(G G^dagger) with G a dim x rank matrix of complex
/// Gaussians drawn from SplitMix64(seed) in row-major order.
DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed);
/// Same construction, drawing from a caller-owned stream.
DensityMatrix random_density(std::size_t dim, std::size_t rank, SplitMix64& rng);

}  // namespace skewent
