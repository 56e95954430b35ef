#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ltqp {

/// Malformed Turtle or query text. Line and column are 1-based.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& message, std::size_t line, std::size_t column)
        : std::runtime_error(message + " at line " + std::to_string(line) + ", column " +
                             std::to_string(column)),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Query text that parses but violates a structural rule (e.g. unused projection).
class QueryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ltqp
