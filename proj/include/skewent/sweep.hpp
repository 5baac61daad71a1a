#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "skewent/qubit_analytic.hpp"

namespace skewent {

enum class OutputFormat { Csv, Json };

/// Grid over Bloch length n in [0,1] and polar angle theta in [0,theta_max],
/// both inclusive and evenly spaced, crossed with an explicit list of azimuths.
struct SweepConfig {
    int n_steps = 11;
    int theta_steps = 13;
    double theta_max = 3.141592653589793;
    std::vector<double> phi_values = default_phi_values();
    double tolerance = 1e-9;
    std::string output_path;
    OutputFormat format = OutputFormat::Csv;

    static std::vector<double> default_phi_values();
    /// Throws OutOfRange for steps < 2, tolerance <= 0, theta_max outside
    /// (0, pi], or phi outside [0, 2pi).
    void validate() const;
};

struct SweepResult {
    std::vector<QubitScanPoint> points;  // lexicographic in (n, theta, phi) index
    double max_abs_diff = 0.0;
    double tolerance = 0.0;

    bool passed() const { return max_abs_diff <= tolerance; }
};

SweepResult run_sweep(const SweepConfig& config);

/// Header row then one row per point; every number printed with 17
/// significant digits ("%.17g").
void write_csv(std::ostream& os, const SweepResult& result);
void write_json(std::ostream& os, const SweepResult& result);

/// Shared number formatting for the file outputs.
std::string format_double(double v);

}  // namespace skewent
