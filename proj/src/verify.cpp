#include "skewent/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>

#include "skewent/entangle.hpp"
#include "skewent/error.hpp"
#include "skewent/linalg.hpp"
#include "skewent/measures.hpp"
#include "skewent/premeasure.hpp"
#include "skewent/qubit_analytic.hpp"
#include "skewent/rng.hpp"
#include "skewent/states.hpp"

namespace skewent {

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t pick(SplitMix64& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng.next() % (hi - lo + 1));
}

BlochVector random_direction(SplitMix64& rng) {
    BlochVector v;
    do {
        v = {rng.gaussian(), rng.gaussian(), rng.gaussian()};
    } while (v.norm() < 1e-6);
    const double len = v.norm();
    return {v.x / len, v.y / len, v.z / len};
}

BlochVector random_bloch(SplitMix64& rng) {
    const BlochVector d = random_direction(rng);
    const double r = std::cbrt(rng.uniform());
    return {r * d.x, r * d.y, r * d.z};
}

Observable random_observable(std::size_t dim, SplitMix64& rng) { return Observable(random_hermitian(dim, rng)); }

PVM random_pvm(std::size_t dim, std::size_t outcomes, SplitMix64& rng) {
    const ComplexMatrix u = random_unitary(dim, rng);
    std::vector<ComplexMatrix> ps(outcomes, ComplexMatrix(dim));
    for (std::size_t c = 0; c < dim; ++c) {
        const std::size_t k = c < outcomes ? c : pick(rng, 0, outcomes - 1);
        ps[k] += ComplexMatrix::outer(u.column(c));
    }
    return PVM(std::move(ps));
}

// The (n, theta, phi) grid used by the qubit suites.
std::vector<SphericalBloch> qubit_grid() {
    std::vector<SphericalBloch> grid;
    for (int i = 0; i <= 10; ++i)
        for (int j = 0; j <= 12; ++j)
            for (double phi : {0.0, kPi / 2.0, kPi}) grid.push_back({i / 10.0, kPi * j / 12.0, phi});
    return grid;
}

using SuiteFn = std::function<double(SplitMix64&, std::size_t)>;

struct Suite {
    const char* name;
    double tolerance;
    SuiteFn run;
};

std::vector<Suite> make_suites() {
    std::vector<Suite> suites;

    // linalg
    suites.push_back({"linalg.eig_reconstruction", 1e-11, [](SplitMix64& rng, std::size_t cases) {
                          double worst = 0.0;
                          for (std::size_t c = 0; c < cases; ++c) {
                              const ComplexMatrix m = random_hermitian(pick(rng, 2, 16), rng);
                              const EigenDecomposition eig = hermitian_eig(m);
                              worst = std::max(worst, max_abs_diff(eig.reconstruct(), m) / std::max(1.0, m.max_abs()));
                          }
                          return worst;
                      }});
    suites.push_back({"linalg.eig_unitarity", 1e-12, [](SplitMix64& rng, std::size_t cases) {
                          double worst = 0.0;
                          for (std::size_t c = 0; c < cases; ++c) {
                              const ComplexMatrix m = random_hermitian(pick(rng, 2, 16), rng);
                              const ComplexMatrix& v = hermitian_eig(m).vectors;
                              worst = std::max(worst, max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(m.dim())));
                          }
                          return worst;
                      }});
    suites.push_back({"linalg.sqrt_roundtrip", 1e-9, [](SplitMix64& rng, std::size_t cases) {
                          double worst = 0.0;
                          for (std::size_t c = 0; c < cases; ++c) {
                              const std::size_t d = pick(rng, 2, 8);
                              const ComplexMatrix m = random_density(d, pick(rng, 1, d), rng).matrix();
                              const ComplexMatrix r = matrix_sqrt_psd(m);
                              worst = std::max(worst, max_abs_diff(r * r, m));
                          }
                          return worst;
                      }});
    suites.push_back({"linalg.exp_unitarity", 1e-10, [](SplitMix64& rng, std::size_t cases) {
                          double worst = 0.0;
                          for (std::size_t c = 0; c < cases; ++c) {
                              const ComplexMatrix h = random_hermitian(pick(rng, 2, 8), rng);
                              const ComplexMatrix u = matrix_exp_antihermitian(h, 4.0 * rng.uniform() - 2.0);
                              worst = std::max(worst, max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(h.dim())));
                          }
                          return worst;
                      }});
    suites.push_back({"linalg.partial_transpose", 1e-12, [](SplitMix64& rng, std::size_t cases) {
                          double worst = 0.0;
                          for (std::size_t c = 0; c < cases; ++c) {
                              const std::size_t a = pick(rng, 2, 3), b = pick(rng, 2, 3);
                              const ComplexMatrix m = random_hermitian(a * b, rng);
                              const Subsystem which = rng.next() % 2 ? Subsystem::A : Subsystem::B;
                              const ComplexMatrix pt = partial_transpose(m, a, b, which);
                              worst = std::max(worst, max_abs_diff(partial_transpose(pt, a, b, which), m));
                              worst = std::max(worst, std::abs(pt.trace() - m.trace()));
                              worst = std::max(worst, pt.hermiticity_defect());
                          }
                          return worst;
                      }});
    suites.push_back({"linalg.trace_norm_bound", 1e-12, [](SplitMix64& rng, std::size_t cases) {
                          double worst = 0.0;
                          for (std::size_t c = 0; c < cases; ++c) {
                              const ComplexMatrix m = random_hermitian(pick(rng, 2, 8), rng);
                              worst = std::max(worst, std::abs(m.trace().real()) - trace_norm(m));
                          }
                          return worst;
                      }});
    suites.push_back({"linalg.kron_mixed_product", 1e-11, [](SplitMix64& rng, std::size_t cases) {
                          double worst = 0.0;
                          for (std::size_t c = 0; c < cases; ++c) {
                              const std::size_t p = pick(rng, 1, 3), q = pick(rng, 1, 3);
                              const ComplexMatrix a = random_hermitian(p, rng), cm = random_hermitian(p, rng);
                              const ComplexMatrix b = random_hermitian(q, rng), d = random_hermitian(q, rng);
                              worst = std::max(worst, max_abs_diff(kron(a, b) * kron(cm, d), kron(a * cm, b * d)));
                          }
                          return worst;
                      }});

    // states
    suites.push_back({"states.bloch_roundtrip", 1e-12, [](SplitMix64& rng, std::size_t cases) {
                          double worst = 0.0;
                          for (std::size_t c = 0; c < cases; ++c) {
                              const DensityMatrix rho = random_density(2, pick(rng, 1, 2), rng);
                              worst = std::max(worst, max_abs_diff(density_from_bloch(bloch_from_density(rho)).matrix(),
                                                                   rho.matrix()));
                          }
                          return worst;
                      }});
    suites.push_back({"states.purity_grid", 1e-12, [](SplitMix64& rng, std::size_t) {
                          double worst = 0.0;
                          for (double len : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                              const BlochVector d = random_direction(rng);
                              const DensityMatrix rho = density_from_bloch({len * d.x, len * d.y, len * d.z});
                              worst = std::max(worst, std::abs(purity(rho) - 0.5 * (1.0 + len * len)));
                          }
                          return worst;
                      }});
    suites.push_back({"states.pvm_invariants", 1e-10, [](SplitMix64& rng, std::size_t cases) {
                          double worst = 0.0;
                          for (std::size_t c = 0; c < cases; ++c) {
                              const PVM pvm = pvm_from_observable(random_observable(pick(rng, 2, 6), rng));
                              worst = std::max(worst, PVM::defect(pvm.projectors()));
                          }
                          return worst;
                      }});

    // measures
    suites.push_back({"measures.nonnegativity", 1e-10, [](SplitMix64& rng, std::size_t cases) {
                          double worst = 0.0;
                          for (std::size_t c = 0; c < cases; ++c) {
                              const std::size_t d = pick(rng, 2, 6);
                              const DensityMatrix rho = random_density(d, pick(rng, 1, d), rng);
                              const Observable x = random_observable(d, rng);
                              // Unclamped commutator form.
                              const ComplexMatrix k = commutator(matrix_sqrt_psd(rho.matrix()), x.matrix());
                              worst = std::max(worst, 0.5 * trace_of_product(k, k).real());
                          }
                          return worst;
                      }});
    suites.push_back({"measures.pure_state_variance", 1e-9, [](SplitMix64& rng, std::size_t cases) {
                          double worst = 0.0;
                          for (std::size_t c = 0; c < cases; ++c) {
                              const std::size_t d = pick(rng, 2, 6);
                              const DensityMatrix rho = random_density(d, 1, rng);
                              const Observable x = random_observable(d, rng);
                              worst = std::max(worst, std::abs(skew_information(rho, x) - variance(rho, x)));
                          }
                          return worst;
                      }});
    suites.push_back({"measures.convexity", 1e-9, [](SplitMix64& rng, std::size_t cases) {
                          double worst = 0.0;
                          for (std::size_t c = 0; c < cases; ++c) {
                              const std::size_t d = pick(rng, 2, 6);
                              const std::size_t parts = pick(rng, 2, 4);
                              const Observable x = random_observable(d, rng);
                              std::vector<double> w(parts);
                              double total = 0.0;
                              for (auto& wi : w) total += (wi = rng.uniform() + 1e-3);
                              ComplexMatrix mix(d);
                              double rhs = 0.0;
                              for (std::size_t j = 0; j < parts; ++j) {
                                  const DensityMatrix rj = random_density(d, pick(rng, 1, d), rng);
                                  mix += rj.matrix() * (w[j] / total);
                                  rhs += w[j] / total * skew_information(rj, x);
                              }
                              const DensityMatrix mixed(mix.hermitian_part());
                              worst = std::max(worst, skew_information(mixed, x) - rhs);
                          }
                          return worst;
                      }});
    suites.push_back({"measures.bipartite_monotonicity", 1e-9, [](SplitMix64& rng, std::size_t cases) {
                          double worst = 0.0;
                          for (std::size_t c = 0; c < cases; ++c) {
                              const std::size_t a = 2, b = pick(rng, 2, 3);
                              const DensityMatrix rab(random_density(a * b, pick(rng, 1, a * b), rng).matrix(), {a, b});
                              const Observable xa = random_observable(a, rng);
                              const Observable xab(kron(xa.matrix(), ComplexMatrix::identity(b)));
                              const DensityMatrix ra(partial_trace(rab.matrix(), a, b, Subsystem::B).hermitian_part());
                              worst = std::max(worst, skew_information(ra, xa) - skew_information(rab, xab));
                          }
                          return worst;
                      }});
    suites.push_back({"measures.definition_equivalence", 1e-10, [](SplitMix64& rng, std::size_t cases) {
                          double worst = 0.0;
                          for (std::size_t c = 0; c < cases; ++c) {
                              const std::size_t d = pick(rng, 2, 6);
                              const DensityMatrix rho = random_density(d, pick(rng, 1, d), rng);
                              const Observable x = random_observable(d, rng);
                              worst = std::max(worst, std::abs(skew_information(rho, x) -
                                                               skew_information_rewritten(rho, x)));
                          }
                          return worst;
                      }});
    suites.push_back({"measures.skew_below_variance", 1e-10, [](SplitMix64& rng, std::size_t cases) {
                          double worst = 0.0;
                          for (std::size_t c = 0; c < cases; ++c) {
                              const std::size_t d = pick(rng, 2, 6);
                              const DensityMatrix rho = random_density(d, pick(rng, 1, d), rng);
                              const Observable x = random_observable(d, rng);
                              worst = std::max(worst, skew_information(rho, x) - variance(rho, x));
                          }
                          return worst;
                      }});

    // premeasure
    suites.push_back({"premeasure.isometry", 1e-10, [](SplitMix64& rng, std::size_t cases) {
                          double worst = 0.0;
                          for (std::size_t c = 0; c < cases; ++c) {
                              const std::size_t d = pick(rng, 2, 6);
                              const PremeasurementSetup setup(random_pvm(d, pick(rng, 2, std::min<std::size_t>(4, d)), rng));
                              const ComplexMatrix v = premeasurement_isometry(setup);
                              worst = std::max(worst, max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(d)));
                          }
                          return worst;
                      }});
    suites.push_back({"premeasure.path_consistency", 1e-9, [](SplitMix64& rng, std::size_t cases) {
                          double worst = 0.0;
                          const PremeasurementSetup setup(computational_pvm());
                          const double tau = 0.5 + rng.uniform();
                          const HamiltonianModel model = default_measurement_hamiltonian(tau);
                          auto check = [&](const BlochVector& b) {
                              const DensityMatrix rho = density_from_bloch(b);
                              const DensityMatrix via_v = premeasure_state(rho, setup);
                              const DensityMatrix via_h = evolve_joint(attach_apparatus(rho, 2), model, tau);
                              worst = std::max(worst, max_abs_diff(via_v.matrix(), via_h.matrix()));
                          };
                          for (const auto& sph : qubit_grid()) check(spherical_to_cartesian(sph));
                          for (std::size_t c = 0; c < cases; ++c) check(random_bloch(rng));
                          return worst;
                      }});
    suites.push_back({"premeasure.born_weights", 1e-10, [](SplitMix64& rng, std::size_t cases) {
                          double worst = 0.0;
                          for (std::size_t c = 0; c < cases; ++c) {
                              const std::size_t d = pick(rng, 2, 6);
                              const PremeasurementSetup setup(random_pvm(d, pick(rng, 2, std::min<std::size_t>(4, d)), rng));
                              const DensityMatrix rho = random_density(d, pick(rng, 1, d), rng);
                              const DensityMatrix joint = premeasure_state(rho, setup);
                              const ComplexMatrix pointer =
                                  partial_trace(joint.matrix(), d, setup.apparatus_dim(), Subsystem::A);
                              for (std::size_t j = 0; j < pointer.rows(); ++j)
                                  for (std::size_t k = 0; k < pointer.cols(); ++k) {
                                      const cplx expected =
                                          j == k ? trace_of_product(setup.pvm().projectors()[k], rho.matrix()) : 0.0;
                                      worst = std::max(worst, std::abs(pointer(j, k) - expected));
                                  }
                          }
                          return worst;
                      }});
    suites.push_back({"premeasure.purity_conservation", 1e-10, [](SplitMix64& rng, std::size_t cases) {
                          double worst = 0.0;
                          for (std::size_t c = 0; c < cases; ++c) {
                              const HamiltonianModel model{random_observable(2, rng), random_observable(2, rng),
                                                           random_observable(4, rng), 1.0};
                              const DensityMatrix rho0(random_density(4, pick(rng, 1, 4), rng).matrix(), {2, 2});
                              const DensityMatrix rho_t = evolve_joint(rho0, model, 3.0 * rng.uniform());
                              worst = std::max(worst, std::abs(purity(rho_t) - purity(rho0)));
                          }
                          return worst;
                      }});

    // entangle
    suites.push_back({"entangle.path_agreement", 1e-10, [](SplitMix64& rng, std::size_t cases) {
                          double worst = 0.0;
                          for (std::size_t c = 0; c < cases; ++c) {
                              const std::size_t a = pick(rng, 2, 3), b = pick(rng, 2, 3);
                              const DensityMatrix rho(random_density(a * b, pick(rng, 1, a * b), rng).matrix(), {a, b});
                              worst = std::max(worst, std::abs(negativity(rho) - negative_eigenvalue_sum(rho)));
                          }
                          return worst;
                      }});
    suites.push_back({"entangle.local_unitary_invariance", 1e-9, [](SplitMix64& rng, std::size_t cases) {
                          double worst = 0.0;
                          for (std::size_t c = 0; c < cases; ++c) {
                              const std::size_t a = pick(rng, 2, 3), b = pick(rng, 2, 3);
                              const DensityMatrix rho(random_density(a * b, pick(rng, 1, a * b), rng).matrix(), {a, b});
                              const ComplexMatrix u = kron(random_unitary(a, rng), random_unitary(b, rng));
                              const DensityMatrix rotated((u * rho.matrix() * u.adjoint()).hermitian_part(), {a, b});
                              worst = std::max(worst, std::abs(negativity(rotated) - negativity(rho)));
                          }
                          return worst;
                      }});
    suites.push_back({"entangle.commuting_inputs_zero", 1e-10, [](SplitMix64& rng, std::size_t cases) {
                          double worst = 0.0;
                          const PremeasurementSetup setup(computational_pvm());
                          for (std::size_t c = 0; c < cases; ++c) {
                              const double nz = 2.0 * rng.uniform() - 1.0;
                              worst = std::max(worst, negativity(premeasure_state(density_from_bloch({0.0, 0.0, nz}), setup)));
                          }
                          for (double nz : {-1.0, 0.0, 1.0})
                              worst = std::max(worst, negativity(premeasure_state(density_from_bloch({0.0, 0.0, nz}), setup)));
                          return worst;
                      }});

    // qubit_analytic
    suites.push_back({"qubit.central_relation", 1e-9, [](SplitMix64&, std::size_t) {
                          double worst = 0.0;
                          for (const auto& sph : qubit_grid()) worst = std::max(worst, evaluate_scan_point(sph).abs_diff());
                          return worst;
                      }});
    suites.push_back({"qubit.azimuthal_invariance", 1e-10, [](SplitMix64& rng, std::size_t cases) {
                          double worst = 0.0;
                          for (std::size_t c = 0; c < cases; ++c) {
                              const double n = rng.uniform(), theta = kPi * rng.uniform();
                              const QubitScanPoint ref = evaluate_scan_point({n, theta, 0.0});
                              const QubitScanPoint p = evaluate_scan_point({n, theta, 2.0 * kPi * rng.uniform()});
                              worst = std::max({worst, std::abs(p.negativity_numeric - ref.negativity_numeric),
                                                std::abs(p.negativity_closed - ref.negativity_closed)});
                          }
                          return worst;
                      }});
    suites.push_back({"qubit.pure_sphere_monotonic", 1e-10, [](SplitMix64&, std::size_t) {
                          double worst = 0.0;
                          double prev = -1.0;
                          for (int j = 0; j <= 90; ++j) {
                              const double theta = kPi / 2.0 * j / 90.0;
                              const QubitScanPoint p = evaluate_scan_point({1.0, theta, 0.0});
                              worst = std::max(worst, std::abs(p.negativity_numeric - std::sin(theta) / 2.0));
                              worst = std::max(worst, prev - p.negativity_numeric);
                              prev = p.negativity_numeric;
                          }
                          return worst;
                      }});
    suites.push_back({"qubit.skew_spherical_vs_numeric", 1e-10, [](SplitMix64&, std::size_t) {
                          double worst = 0.0;
                          for (const auto& sph : qubit_grid()) {
                              const QubitScanPoint p = evaluate_scan_point(sph);
                              worst = std::max(worst, std::abs(skew_closed_form_spherical(sph) - p.skew_numeric));
                          }
                          return worst;
                      }});
    // Fails for mixed states off the z axis: the Cartesian expression is |n|^2
    // times the skew information.
    suites.push_back({"qubit.skew_cartesian_vs_numeric", 1e-10, [](SplitMix64&, std::size_t) {
                          double worst = 0.0;
                          for (const auto& sph : qubit_grid()) {
                              const QubitScanPoint p = evaluate_scan_point(sph);
                              worst = std::max(worst, std::abs(p.skew_closed - p.skew_numeric));
                          }
                          return worst;
                      }});
    suites.push_back({"qubit.relation_from_skew_information", 1e-9, [](SplitMix64& rng, std::size_t cases) {
                          double worst = 0.0;
                          auto check = [&](const BlochVector& b) {
                              const DensityMatrix rho = density_from_bloch(b);
                              const double predicted =
                                  negativity_from_skew_information(skew_information(rho, Observable(pauli_z())), mixedness(rho));
                              const double actual = negativity(premeasure_state(rho, PremeasurementSetup(computational_pvm())));
                              worst = std::max(worst, std::abs(predicted - actual));
                          };
                          for (const auto& sph : qubit_grid()) check(spherical_to_cartesian(sph));
                          for (std::size_t c = 0; c < cases; ++c) check(random_bloch(rng));
                          return worst;
                      }});
    suites.push_back({"qubit.geometric_direction", 1e-9, [](SplitMix64& rng, std::size_t cases) {
                          double worst = 0.0;
                          for (std::size_t c = 0; c < cases; ++c) {
                              const BlochVector b = random_bloch(rng);
                              const BlochVector m = random_direction(rng);
                              worst = std::max(worst, std::abs(negativity_geometric(b, m) - numeric_negativity_along(b, m)));
                          }
                          return worst;
                      }});
    return suites;
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
    if (options.cases == 0) throw Error(ErrorCode::OutOfRange, "--cases must be >= 1");
    std::vector<SuiteResult> results;
    const std::vector<Suite> suites = make_suites();
    for (std::size_t k = 0; k < suites.size(); ++k) {
        const Suite& suite = suites[k];
        SuiteResult r;
        r.name = suite.name;
        r.cases = options.cases;
        r.tolerance = options.tolerance_override.value_or(suite.tolerance);
        SplitMix64 rng(options.seed + k);
        try {
            r.worst = std::max(0.0, suite.run(rng, options.cases));
            r.passed = r.worst <= r.tolerance;
        } catch (const std::exception& e) {
            r.worst = std::numeric_limits<double>::infinity();
            r.passed = false;
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

void print_report(std::ostream& os, const std::vector<SuiteResult>& results) {
    const auto flags = os.flags();
    std::size_t failed = 0;
    for (const auto& r : results) {
        os << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(36) << r.name << std::right
           << " worst=" << std::scientific << std::setprecision(3) << r.worst << "  tol=" << r.tolerance;
        if (!r.detail.empty()) os << "  (" << r.detail << ")";
        os << '\n';
        if (!r.passed) ++failed;
    }
    os.flags(flags);
    os << results.size() - failed << "/" << results.size() << " suites passed\n";
}

}  // namespace skewent
