#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sihins {

// Base of every error the library throws. The CLI maps each subclass to
// its own exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A parameter set or scenario violates one of its invariants.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Malformed configuration text.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    // Not tied to a file line (e.g. a command-line flag).
    explicit ParseError(const std::string& what) : Error(what), line_(0) {}

    /// 1-based; 0 when the error is not tied to a line.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Numerical failures: a step produced a negative compartment, or two
// independent derivations of the same quantity disagree.
class NumericalError : public Error {
public:
    using Error::Error;
};

class NegativeStateProduced : public NumericalError {
public:
    NegativeStateProduced(std::size_t step, const std::string& what)
        : NumericalError("step " + std::to_string(step) + ": " + what), step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

class InternalInconsistency : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Trajectory and policy disagree on dt or horizon.
class GridMismatch : public Error {
public:
    using Error::Error;
};

// Nobody pays premiums, so the net premium is undefined.
class DegenerateBase : public Error {
public:
    using Error::Error;
};

class InvalidPerturbation : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// A sensitivity index was requested for a quantity whose baseline is 0.
class ZeroBaseline : public Error {
public:
    using Error::Error;
};

}  // namespace sihins
