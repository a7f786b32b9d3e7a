#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thermistor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid run parameters or configuration text. `line()` is 0 when the
/// problem is not tied to a specific input line.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what, std::size_t line = 0)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A coefficient function returned an unphysical value (k <= 0, sigma < 0).
class ModelError : public Error {
public:
    using Error::Error;
};

/// Pivot breakdown in a linear solve.
class SingularSystemError : public Error {
public:
    SingularSystemError(const std::string& what, std::size_t row)
        : Error(what + " (row " + std::to_string(row) + ")"), row_(row) {}

    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

/// Failure inside the time loop: singular solve, NaN, or a model error,
/// annotated with the step index at which it happened.
class NumericalFailure : public Error {
public:
    NumericalFailure(const std::string& what, std::size_t step)
        : Error("step " + std::to_string(step) + ": " + what), step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

}  // namespace thermistor
