#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ascent {

enum class ErrorKind {
    EmptyInput,
    UnbalancedPath,
    NegativePrefix,
    InvalidSymbol,
    SizeLimitExceeded,
    SizeMismatch,
    NotInFamily,
    BoundsViolated,
    NotNonincreasing,
    NonPositive,
    NoMeet,
    NotAnInterval,
    Infeasible,
    NotInWn,
    IllegalStep,
    NonInvertibleConstant,
    BadSqrtConstant,
    NonIntegerCoefficient,
    DivisionFailure,
    SizeTooSmall,
    NoSuchInsertion,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Recoverable domain error: bad input, or input outside an operation's domain.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// A structural invariant failed. Never recoverable.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::UnbalancedPath: return "UnbalancedPath";
    case ErrorKind::NegativePrefix: return "NegativePrefix";
    case ErrorKind::InvalidSymbol: return "InvalidSymbol";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NotInFamily: return "NotInFamily";
    case ErrorKind::BoundsViolated: return "BoundsViolated";
    case ErrorKind::NotNonincreasing: return "NotNonincreasing";
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::NoMeet: return "NoMeet";
    case ErrorKind::NotAnInterval: return "NotAnInterval";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::NotInWn: return "NotInWn";
    case ErrorKind::IllegalStep: return "IllegalStep";
    case ErrorKind::NonInvertibleConstant: return "NonInvertibleConstant";
    case ErrorKind::BadSqrtConstant: return "BadSqrtConstant";
    case ErrorKind::NonIntegerCoefficient: return "NonIntegerCoefficient";
    case ErrorKind::DivisionFailure: return "DivisionFailure";
    case ErrorKind::SizeTooSmall: return "SizeTooSmall";
    case ErrorKind::NoSuchInsertion: return "NoSuchInsertion";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace ascent
