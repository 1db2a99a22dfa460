#pragma once

#include <stdexcept>
#include <string>

namespace singlab {

/// Base class for every error raised by the library. `code()` is the stable
/// machine-readable name used in CLI error output and catalog expectations.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
    virtual const char* code() const noexcept { return "Error"; }
};

#define SINGLAB_ERROR_CODE(name)                              \
    const char* code() const noexcept override { return #name; }

/// Malformed polynomial text. `position` is a 0-based byte offset into the input.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    SINGLAB_ERROR_CODE(ParseError)
    std::size_t position;
};

/// An identifier in the input is not among the declared variables.
struct UnknownVariable : Error {
    UnknownVariable(const std::string& name, std::size_t pos)
        : Error("unknown variable '" + name + "' (at position " + std::to_string(pos) + ")"),
          name(name), position(pos) {}
    SINGLAB_ERROR_CODE(UnknownVariable)
    std::string name;
    std::size_t position;
};

/// Operands live in polynomial rings with different variable counts.
struct VariableCountMismatch : Error {
    using Error::Error;
    SINGLAB_ERROR_CODE(VariableCountMismatch)
};

/// The weight equations over the support have no solution.
struct NoSolution : Error {
    using Error::Error;
    SINGLAB_ERROR_CODE(NoSolution)
};

/// The weight equations are underdetermined; the caller must supply weights.
struct NonUniqueWeights : Error {
    using Error::Error;
    SINGLAB_ERROR_CODE(NonUnique)
};

/// The unique weight solution has an entry outside the open interval (0,1).
struct NonPositiveWeights : Error {
    using Error::Error;
    SINGLAB_ERROR_CODE(NonPositive)
};

/// No pure power of some variable occurs among the leading terms: the
/// staircase complement is infinite and the singularity is not isolated.
struct NonIsolated : Error {
    using Error::Error;
    SINGLAB_ERROR_CODE(NonIsolated)
};

// Internal-consistency alarms. These indicate an implementation bug, never a
// property of valid input.
struct SymmetryViolation : Error {
    using Error::Error;
    SINGLAB_ERROR_CODE(SymmetryViolation)
};
struct OrderViolation : Error {
    using Error::Error;
    SINGLAB_ERROR_CODE(OrderViolation)
};
struct ConsistencyViolation : Error {
    using Error::Error;
    SINGLAB_ERROR_CODE(ConsistencyViolation)
};
struct IntegralityViolation : Error {
    using Error::Error;
    SINGLAB_ERROR_CODE(IntegralityViolation)
};

// Numeric-module failures.
struct ConvergenceBudgetExceeded : Error {
    using Error::Error;
    SINGLAB_ERROR_CODE(ConvergenceBudgetExceeded)
};
struct SingularPoint : Error {
    using Error::Error;
    SINGLAB_ERROR_CODE(SingularPoint)
};
struct PhaseStepTooLarge : Error {
    using Error::Error;
    SINGLAB_ERROR_CODE(PhaseStepTooLarge)
};
struct DriftExceeded : Error {
    using Error::Error;
    SINGLAB_ERROR_CODE(DriftExceeded)
};

#undef SINGLAB_ERROR_CODE

}  // namespace singlab
