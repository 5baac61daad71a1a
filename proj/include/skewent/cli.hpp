#pragma once

#include <iosfwd>

#include "skewent/states.hpp"

namespace skewent {

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // tolerance exceeded or a suite failed
inline constexpr int kExitUsage = 2;    // bad arguments or I/O error

/// Entry point behind the `skewent` executable: subcommands sweep, demo and
/// verify. Normal output goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Human-readable single-point report for a sigma_z premeasurement.
/// Returns true when the closed-form negativity matches the numeric one to 1e-9.
bool write_demo_report(std::ostream& os, const SphericalBloch& sph);

}  // namespace skewent
