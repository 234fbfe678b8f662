#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace hhiv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An interval was constructed with NaN, infinite, or reversed endpoints.
class InvalidInterval : public Error {
public:
    using Error::Error;
};

/// An arithmetic result overflowed to a non-finite endpoint.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Interval division by a divisor that contains zero.
class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Expression text could not be parsed.
class ParseError : public Error {
public:
    enum class Kind { syntax, unknown_identifier, trailing_input };

    ParseError(Kind kind, std::size_t position, const std::string& detail)
        : Error(std::string(describe(kind)) + " at position " + std::to_string(position) + ": " + detail),
          kind_(kind), position_(position), detail_(detail) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t position() const noexcept { return position_; }
    const std::string& detail() const noexcept { return detail_; }

    static const char* describe(Kind kind) noexcept {
        switch (kind) {
            case Kind::syntax: return "syntax error";
            case Kind::unknown_identifier: return "unknown identifier";
            case Kind::trailing_input: return "trailing input";
        }
        return "parse error";
    }

private:
    Kind kind_;
    std::size_t position_;
    std::string detail_;
};

/// Evaluation outside a function's domain: ln/sqrt of a negative, division by
/// zero, non-finite result, or a point outside [a, b].
class DomainError : public Error {
public:
    DomainError(const std::string& what, std::string subexpression = {})
        : Error(what), subexpression_(std::move(subexpression)) {}

    const std::string& subexpression() const noexcept { return subexpression_; }

private:
    std::string subexpression_;
};

/// An interval-valued function broke lower <= upper or lower > 0 at a point.
class InvariantError : public Error {
public:
    InvariantError(const std::string& what, double at) : Error(what), at_(at) {}
    double at() const noexcept { return at_; }

private:
    double at_;
};

/// Adaptive quadrature hit its refinement limit before reaching tolerance.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

}  // namespace hhiv
