#pragma once

#include <stdexcept>
#include <string>

namespace tds {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (trig grammar, surd grammar, matrix lists).
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// A query outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

struct ParityError : DomainError {
    using DomainError::DomainError;
};
struct ConvergenceBound : DomainError {
    using DomainError::DomainError;
};
struct RationalInput : DomainError {
    using DomainError::DomainError;
};
struct NonRealInput : DomainError {
    using DomainError::DomainError;
};
struct PerfectSquare : DomainError {
    using DomainError::DomainError;
};
struct NotInGroup : DomainError {
    using DomainError::DomainError;
};
struct ResourceCap : DomainError {
    using DomainError::DomainError;
};
struct InsufficientPrecision : DomainError {
    using DomainError::DomainError;
};
struct PrecisionUnderflow : DomainError {
    using DomainError::DomainError;
};

/// Violation of an internal invariant; never expected on valid input.
struct InternalError : Error {
    using Error::Error;
};

/// (c rho + d)^(s-2m-1) - 1 vanished during a fixed-point solve. This is
/// impossible for real quadratic rho with s >= 2j+2, so raising it signals
/// a bug, not a bad query.
struct DegenerateDenominator : InternalError {
    using InternalError::InternalError;
};

}  // namespace tds
