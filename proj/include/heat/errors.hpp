// errors.hpp: exception types shared by the heat-transport library

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace heat {

// Invalid input: parameters violating an invariant, malformed configuration.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidTemperature : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
public:
    ParseError(std::size_t line, const std::string& what)
        : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Valid input for which the numerics could not deliver a result.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PoleError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class SingularityError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ToleranceError : public NumericalError {
public:
    ToleranceError(const std::string& what, double value, double error_estimate)
        : NumericalError(what), value_(value), error_estimate_(error_estimate) {}
    double value() const noexcept { return value_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double value_;
    double error_estimate_;
};

} // namespace heat
