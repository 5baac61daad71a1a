#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewent {

enum class ErrorCode {
    NotHermitian,
    NotSquare,
    NonFinite,
    NoConvergence,
    NotPositiveSemidefinite,
    DimensionMismatch,
    InvalidState,
    BlochOutOfBall,
    BadRank,
    InvalidPVM,
    NonpositiveDuration,
    OutOfRange,
    InconsistentInputs,
    NotUnitDirection,
    InternalConsistency,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this type; code() identifies the
// failed precondition so callers and tests can branch on it.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace skewent
