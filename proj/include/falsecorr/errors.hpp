#pragma once

#include <stdexcept>
#include <string>

namespace falsecorr {

// Machine-readable error codes surfaced through the CLI as {"error": {...}}.
enum class ErrorCode {
    // correlation matrices
    NotSquare,
    NotSymmetric,
    DiagonalNotUnit,
    NotPSD,
    DimensionMismatch,
    ZeroVarianceColumn,
    TooFewRows,
    BadDimension,
    // DAGs
    ParentNotEarlier,
    AncestralViolation,
    TerminalViolation,
    NotPerfect,
    BadSize,
    DisconnectedEndpoints,
    // estimation / reduction
    SingularParentBlock,
    DegenerateVariance,
    DegenerateCollapse,
    // bounds / optimization
    BadArguments,
    DeltaOutOfRange,
    BadAngle,
    InfeasibleR,
    // binary
    TooLarge,
    DegenerateConditioning,
    // search
    EmptyPool,
    BudgetExceeded,
    // cli / io
    UnknownCommand,
    MissingArgument,
    BadValue,
    IoFailure,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace falsecorr
