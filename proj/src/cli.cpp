#include "skewent/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skewent/entangle.hpp"
#include "skewent/error.hpp"
#include "skewent/measures.hpp"
#include "skewent/premeasure.hpp"
#include "skewent/qubit_analytic.hpp"
#include "skewent/sweep.hpp"
#include "skewent/verify.hpp"

namespace skewent {

namespace {

constexpr double kRelationTol = 1e-9;

void check_spherical(const SphericalBloch& sph) {
    if (!(sph.n >= 0.0 && sph.n <= 1.0)) throw Error(ErrorCode::OutOfRange, "n must lie in [0, 1]");
    if (!(sph.theta >= 0.0 && sph.theta <= std::numbers::pi))
        throw Error(ErrorCode::OutOfRange, "theta must lie in [0, pi]");
    if (!(sph.phi >= 0.0 && sph.phi < 2.0 * std::numbers::pi))
        throw Error(ErrorCode::OutOfRange, "phi must lie in [0, 2pi)");
}

int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err) {
    SweepResult result;
    try {
        result = run_sweep(config);
    } catch (const Error& e) {
        err << "sweep: " << e.what() << '\n';
        return kExitUsage;
    }

    auto emit = [&](std::ostream& os) {
        if (config.format == OutputFormat::Json)
            write_json(os, result);
        else
            write_csv(os, result);
    };
    if (config.output_path.empty() || config.output_path == "-") {
        emit(out);
    } else {
        std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "sweep: cannot open " << config.output_path << " for writing\n";
            return kExitUsage;
        }
        emit(file);
        file.close();
        if (!file) {
            err << "sweep: write to " << config.output_path << " failed\n";
            return kExitUsage;
        }
    }

    err << "sweep: " << result.points.size() << " points, max |closed - numeric| negativity = "
        << format_double(result.max_abs_diff) << " (tol " << format_double(result.tolerance) << ")\n";
    if (!result.passed()) {
        err << "sweep: ToleranceExceeded\n";
        return kExitFailure;
    }
    return kExitOk;
}

int cmd_demo(const SphericalBloch& sph, std::ostream& out, std::ostream& err) {
    try {
        check_spherical(sph);
        return write_demo_report(out, sph) ? kExitOk : kExitFailure;
    } catch (const Error& e) {
        err << "demo: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
    if (options.cases < 1) {
        err << "verify: --cases must be >= 1\n";
        return kExitUsage;
    }
    if (options.tolerance_override && !(*options.tolerance_override > 0.0)) {
        err << "verify: --tol must be positive\n";
        return kExitUsage;
    }
    const auto results = run_verification(options);
    out << "seed " << options.seed << ", " << options.cases << " cases per suite\n";
    print_report(out, results);
    return all_passed(results) ? kExitOk : kExitFailure;
}

}  // namespace

bool write_demo_report(std::ostream& os, const SphericalBloch& sph) {
    check_spherical(sph);
    const BlochVector b = spherical_to_cartesian(sph);
    const DensityMatrix rho = density_from_bloch(b);
    const Observable sz(pauli_z());
    const DensityMatrix joint = premeasure_state(rho, PremeasurementSetup(computational_pvm()));

    const double skew_commutator = skew_information(rho, sz);
    const double skew_trace = skew_information_rewritten(rho, sz);
    const double skew_spherical = skew_closed_form_spherical(sph);
    const double skew_cartesian = skew_closed_form_cartesian(b, sph.n);
    const double mix = mixedness(rho);
    const double neg_trace_norm = negativity(joint);
    const double neg_eigen = negative_eigenvalue_sum(joint);
    const double neg_closed = negativity_closed_form(skew_cartesian, mixedness_closed_form(sph.n), sph.n);
    const double neg_from_skew = negativity_from_skew_information(skew_commutator, mix);
    const bool holds = std::abs(neg_closed - neg_trace_norm) <= kRelationTol;

    const auto flags = os.flags();
    const auto prec = os.precision();
    os << std::setprecision(12);
    os << "input  n = " << sph.n << ", theta = " << sph.theta << ", phi = " << sph.phi << " (radians)\n";
    os << "Bloch vector (" << b.x << ", " << b.y << ", " << b.z << ")\n\n";
    os << "rho_in =\n" << rho.matrix() << '\n';
    os << "premeasurement state (system (x) apparatus, sigma_z / CNOT) =\n" << joint.matrix() << '\n';
    os << "skew information  commutator form  " << skew_commutator << '\n';
    os << "                  trace form       " << skew_trace << '\n';
    os << "                  (1-sqrt(1-n^2)) sin^2(theta)      " << skew_spherical << '\n';
    os << "                  (1-sqrt(1-n^2)) (n_x^2 + n_y^2)   " << skew_cartesian << '\n';
    os << "mixedness         Tr rho - Tr rho^2 " << mix << "  closed " << mixedness_closed_form(sph.n) << '\n';
    os << "negativity        trace norm       " << neg_trace_norm << '\n';
    os << "                  negative eigs    " << neg_eigen << '\n';
    os << "                  closed form      " << neg_closed << "  (from the (n_x^2 + n_y^2) expression)\n";
    os << "                  from skew info   " << neg_from_skew << "  (1/2 sqrt(I (1 + sqrt(2M))))\n";
    if (neg_trace_norm >= 0.5 - 1e-10)
        os << "entanglement: maximally entangled\n";
    else if (neg_trace_norm <= 1e-12)
        os << "entanglement: none (zero entanglement)\n";
    else
        os << "entanglement: partial\n";
    os << "closed-form relation " << (holds ? "holds" : "FAILS") << " at tolerance 1e-9 (|diff| = "
       << std::scientific << std::abs(neg_closed - neg_trace_norm) << ")\n";
    os.flags(flags);
    os.precision(prec);
    return holds;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Premeasurement entanglement, skew information and mixedness for qubits", "skewent"};
    app.require_subcommand(1);

    SweepConfig sweep;
    std::string format = "csv";
    auto* sweep_cmd = app.add_subcommand("sweep", "Scan (n, theta, phi) and compare closed-form and numeric negativity");
    sweep_cmd->add_option("--n-steps", sweep.n_steps, "Grid points for the Bloch length in [0, 1]")
        ->capture_default_str();
    sweep_cmd->add_option("--theta-steps", sweep.theta_steps, "Grid points for the polar angle in [0, pi]")
        ->capture_default_str();
    sweep_cmd->add_option("--theta-max", sweep.theta_max, "Upper end of the polar-angle grid, radians")
        ->capture_default_str();
    sweep_cmd->add_option("--phi", sweep.phi_values, "Azimuthal angles in radians (repeatable)")
        ->capture_default_str();
    sweep_cmd->add_option("--tol", sweep.tolerance, "Maximum allowed |closed - numeric| negativity")
        ->capture_default_str();
    sweep_cmd->add_option("--out", sweep.output_path, "Output file ('-' or omitted for stdout)");
    sweep_cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    SphericalBloch demo;
    auto* demo_cmd = app.add_subcommand("demo", "Report every quantity for one qubit state");
    demo_cmd->add_option("--n", demo.n, "Bloch length in [0, 1]")->required();
    demo_cmd->add_option("--theta", demo.theta, "Polar angle in radians")->required();
    demo_cmd->add_option("--phi", demo.phi, "Azimuthal angle in radians")->capture_default_str();

    VerifyOptions verify;
    double verify_tol = 0.0;
    auto* verify_cmd = app.add_subcommand("verify", "Run every invariant suite");
    verify_cmd->add_option("--seed", verify.seed, "PRNG seed")->capture_default_str();
    verify_cmd->add_option("--cases", verify.cases, "Random cases per suite")->capture_default_str();
    auto* tol_opt = verify_cmd->add_option("--tol", verify_tol, "Override every suite tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        if (const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front())
            err << sub->help();
        else
            err << app.help();
        return kExitUsage;
    }

    if (sweep_cmd->parsed()) {
        sweep.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
        return cmd_sweep(sweep, out, err);
    }
    if (demo_cmd->parsed()) return cmd_demo(demo, out, err);
    if (tol_opt->count() > 0) verify.tolerance_override = verify_tol;
    return cmd_verify(verify, out, err);
}

}  // namespace skewent
