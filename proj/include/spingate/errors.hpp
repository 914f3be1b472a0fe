#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spingate {

// Input matrix fails the Hermiticity precondition of an eigensolver call.
class hermiticity_error : public std::runtime_error {
public:
    explicit hermiticity_error(const std::string& what) : std::runtime_error(what) {}
};

// Jacobi sweeps exhausted without reducing the off-diagonal norm below threshold.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// Objective returned NaN/Inf during a minimization.
class search_error : public std::runtime_error {
public:
    explicit search_error(const std::string& what) : std::runtime_error(what) {}
};

// Syntax or semantic error in a .ham document, with 1-based source position.
class parse_error : public std::runtime_error {
public:
    parse_error(std::string message, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line),
          column_(column),
          message_(std::move(message)) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

}  // namespace spingate
