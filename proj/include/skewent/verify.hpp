#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace skewent {

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::size_t cases = 200;
    /// Replaces every suite's own tolerance when set.
    std::optional<double> tolerance_override;
};

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    double worst = 0.0;  // largest residual seen; pass iff worst <= tolerance
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;  // exception text when a suite aborted
};

/// Runs every invariant suite in a fixed order. Suite k draws from
/// SplitMix64(seed + k), so results do not depend on which other suites ran.
std::vector<SuiteResult> run_verification(const VerifyOptions& options);

void print_report(std::ostream& os, const std::vector<SuiteResult>& results);

inline bool all_passed(const std::vector<SuiteResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace skewent
