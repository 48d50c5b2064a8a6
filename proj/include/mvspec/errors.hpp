#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mvspec {

/// Bad argument to a constructor or lookup (e.g. chain(1), empty product).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented domain, e.g. a quotient by
/// a set that is not an implication filter.
class PreconditionViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Two computations that must agree did not. Only reachable with corrupted
/// tables.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An enumeration would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace mvspec
