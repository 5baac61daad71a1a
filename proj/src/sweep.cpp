#include "skewent/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include <json.hpp>

#include "skewent/error.hpp"

namespace skewent {

std::vector<double> SweepConfig::default_phi_values() {
    return {0.0, std::numbers::pi / 2.0, std::numbers::pi};
}

void SweepConfig::validate() const {
    if (n_steps < 2) throw Error(ErrorCode::OutOfRange, "--n-steps must be >= 2");
    if (theta_steps < 2) throw Error(ErrorCode::OutOfRange, "--theta-steps must be >= 2");
    if (!(theta_max > 0.0 && theta_max <= std::numbers::pi))
        throw Error(ErrorCode::OutOfRange, "--theta-max must lie in (0, pi]");
    if (!(tolerance > 0.0)) throw Error(ErrorCode::OutOfRange, "--tol must be positive");
    if (phi_values.empty()) throw Error(ErrorCode::OutOfRange, "at least one --phi value is required");
    for (double phi : phi_values) {
        if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi)) {
            throw Error(ErrorCode::OutOfRange, "phi " + format_double(phi) + " outside [0, 2pi)");
        }
    }
}

SweepResult run_sweep(const SweepConfig& config) {
    config.validate();
    SweepResult result;
    result.tolerance = config.tolerance;
    result.points.reserve(static_cast<std::size_t>(config.n_steps * config.theta_steps) * config.phi_values.size());
    for (int i = 0; i < config.n_steps; ++i) {
        // The last grid point is set exactly, not accumulated.
        const double n = i + 1 == config.n_steps ? 1.0 : static_cast<double>(i) / (config.n_steps - 1);
        for (int j = 0; j < config.theta_steps; ++j) {
            const double theta = j + 1 == config.theta_steps
                                     ? config.theta_max
                                     : config.theta_max * static_cast<double>(j) / (config.theta_steps - 1);
            for (double phi : config.phi_values) {
                QubitScanPoint p = evaluate_scan_point({n, theta, phi});
                result.max_abs_diff = std::max(result.max_abs_diff, p.abs_diff());
                result.points.push_back(p);
            }
        }
    }
    return result;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(std::ostream& os, const SweepResult& result) {
    os << "n,theta,phi,skew_closed,skew_numeric,mixedness,negativity_closed,negativity_numeric,abs_diff\n";
    for (const auto& p : result.points) {
        os << format_double(p.n) << ',' << format_double(p.theta) << ',' << format_double(p.phi) << ','
           << format_double(p.skew_closed) << ',' << format_double(p.skew_numeric) << ','
           << format_double(p.mixedness) << ',' << format_double(p.negativity_closed) << ','
           << format_double(p.negativity_numeric) << ',' << format_double(p.abs_diff()) << '\n';
    }
}

void write_json(std::ostream& os, const SweepResult& result) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& p : result.points) {
        rows.push_back({{"n", p.n},
                        {"theta", p.theta},
                        {"phi", p.phi},
                        {"skew_closed", p.skew_closed},
                        {"skew_numeric", p.skew_numeric},
                        {"mixedness", p.mixedness},
                        {"negativity_closed", p.negativity_closed},
                        {"negativity_numeric", p.negativity_numeric},
                        {"abs_diff", p.abs_diff()}});
    }
    nlohmann::ordered_json doc = {{"tolerance", result.tolerance},
                                  {"max_abs_diff", result.max_abs_diff},
                                  {"passed", result.passed()},
                                  {"rows", std::move(rows)}};
    os << doc.dump(2) << '\n';
}

}  // namespace skewent
