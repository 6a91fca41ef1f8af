#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qrabi {

enum class ErrorCode {
    NonPositiveOmega,
    NegativeCoupling,
    NonFiniteInput,
    InsufficientLevels,
    NegativeDegree,
    NegativeIndex,
    DegenerateNorm,
    TruncationTooSmall,
    IndexOrder,
    ResonantDenominator,
    EigensolverFailure,
    NoConvergence,
    IncompleteBasis,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every engine reports failures through this one type; the code is what
// callers (and the CLI exit-status mapping) dispatch on.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace qrabi
