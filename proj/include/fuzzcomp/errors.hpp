#pragma once

#include <stdexcept>
#include <string>

namespace fuzzcomp {

/// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or out-of-range data in a parsed document.
struct SchemaError : Error {
    explicit SchemaError(const std::string& msg) : Error("schema: " + msg) {}
};

/// Structurally valid data that violates a semantic invariant.
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error("validation: " + msg) {}
};

/// Eta function samples are not a strictly decreasing map with the pinned endpoints.
struct InvalidEtaError : Error {
    explicit InvalidEtaError(const std::string& msg) : Error("invalid eta: " + msg) {}
};

/// mu2/mu3 applied to an empty family.
struct EmptyAggregationError : Error {
    EmptyAggregationError() : Error("empty aggregation: mu2/mu3 require a nonempty family") {}
};

/// A machine still carries non-final mass after the step budget.
struct NotHaltedError : Error {
    explicit NotHaltedError(std::size_t max_steps)
        : Error("not halted within " + std::to_string(max_steps) + " steps"),
          max_steps(max_steps) {}
    std::size_t max_steps;
};

/// Configuration encoding would exceed the configured width cap.
struct TooLargeError : Error {
    explicit TooLargeError(const std::string& msg) : Error("too large: " + msg) {}
};

struct EmptyProofSpaceError : Error {
    EmptyProofSpaceError() : Error("empty proof space: sup/inf undefined") {}
};

struct EmptyInputSpaceError : Error {
    EmptyInputSpaceError() : Error("empty input space: sup/inf undefined") {}
};

struct NoSolutionError : Error {
    explicit NoSolutionError(const std::string& instance)
        : Error("no solution for instance \"" + instance + "\"") {}
};

struct DivisionByZeroError : Error {
    explicit DivisionByZeroError(const std::string& msg) : Error("division by zero: " + msg) {}
};

}  // namespace fuzzcomp
