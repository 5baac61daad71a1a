#include "skewent/measures.hpp"

#include <string>

#include "skewent/error.hpp"
#include "skewent/linalg.hpp"

namespace skewent {

namespace {

double clamp_nonnegative(double v, const NumericSettings& s, const char* what) {
    if (v >= 0.0) return v + 0.0;  // no -0 in output
    if (v >= -s.scalar_clamp) return 0.0;
    throw Error(ErrorCode::InternalConsistency, std::string(what) + " came out negative: " + std::to_string(v));
}

void require_same_dim(const DensityMatrix& rho, const Observable& x, const char* what) {
    if (rho.dim() != x.dim()) {
        throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": state is " + std::to_string(rho.dim()) +
                                                      "-dimensional, observable " + std::to_string(x.dim()));
    }
}

}  // namespace

double skew_information(const DensityMatrix& rho, const Observable& x, const NumericSettings& s) {
    require_same_dim(rho, x, "skew_information");
    const ComplexMatrix root = matrix_sqrt_psd(rho.matrix(), s);
    const ComplexMatrix c = commutator(root, x.matrix());
    return clamp_nonnegative(-0.5 * trace_of_product(c, c).real(), s, "skew information");
}

double skew_information_rewritten(const DensityMatrix& rho, const Observable& x, const NumericSettings& s) {
    require_same_dim(rho, x, "skew_information_rewritten");
    const ComplexMatrix& m = rho.matrix();
    const ComplexMatrix& xm = x.matrix();
    const ComplexMatrix root = matrix_sqrt_psd(m, s);
    const double second_moment = trace_of_product(m, xm * xm).real();
    const ComplexMatrix rx = root * xm;
    const double overlap = trace_of_product(rx, rx).real();
    return clamp_nonnegative(second_moment - overlap, s, "skew information");
}

double purity(const DensityMatrix& rho) { return trace_of_product(rho.matrix(), rho.matrix()).real(); }

double mixedness(const DensityMatrix& rho, const NumericSettings& s) {
    return clamp_nonnegative(rho.matrix().trace().real() - purity(rho), s, "mixedness");
}

double variance(const DensityMatrix& rho, const Observable& x, const NumericSettings& s) {
    require_same_dim(rho, x, "variance");
    const ComplexMatrix& xm = x.matrix();
    const double mean = trace_of_product(rho.matrix(), xm).real();
    const double second = trace_of_product(rho.matrix(), xm * xm).real();
    return clamp_nonnegative(second - mean * mean, s, "variance");
}

}  // namespace skewent
