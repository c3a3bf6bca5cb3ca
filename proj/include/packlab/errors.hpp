#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace packlab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph, vertex id out of range, bad argument combination.
class InputError : public Error {
public:
    using Error::Error;
};

/// Text input that does not follow the expected file format.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t offset)
        : Error("line " + std::to_string(line) + ", offset " + std::to_string(offset) + ": " + what),
          line_(line),
          offset_(offset) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t line_;
    std::size_t offset_;
};

/// The exact search ran out of its node budget. Carries the best size found so far.
class BudgetError : public Error {
public:
    BudgetError(const std::string& what, std::size_t best_lower_bound)
        : Error(what), best_lower_bound_(best_lower_bound) {}

    std::size_t best_lower_bound() const noexcept { return best_lower_bound_; }

private:
    std::size_t best_lower_bound_;
};

/// Reduction parameters (k1, k2) outside the admissible range.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// An operation was called on a graph that does not satisfy its structural precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A constructed reduction instance failed one of its distance checks.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A packing was decoded into a truth assignment that does not satisfy the formula.
class ExtractionError : public Error {
public:
    using Error::Error;
};

}  // namespace packlab
