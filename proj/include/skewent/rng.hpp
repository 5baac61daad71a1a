#pragma once

#include <cstdint>

#include "skewent/matrix.hpp"

namespace skewent {

/// SplitMix64 (Steele, Lea & Flood). The whole generator is the three
/// shift-xor-multiply lines in next(), so other implementations can
/// reproduce the stream exactly from the seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) from the top 53 bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (cosine branch only; one draw per call).
    double gaussian() noexcept;

    /// Real and imaginary parts are independent standard normals.
    cplx complex_gaussian() noexcept;

private:
    std::uint64_t state_;
};

/// dim x dim Hermitian (G + G^dagger)/2 with Gaussian G.
ComplexMatrix random_hermitian(std::size_t dim, SplitMix64& rng);

/// Eigenvectors of a GUE sample: Haar-distributed up to column phases.
ComplexMatrix random_unitary(std::size_t dim, SplitMix64& rng);

}  // namespace skewent
