#pragma once

#include <stdexcept>
#include <string>

namespace graphmeasure {

/// Domain error: unknown identifier, value outside a measure's domain,
/// operation on an incompatible argument. Maps to CLI exit code 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Parse error with a source position. Maps to CLI exit code 2.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Enumeration gave up: the diagram state space exceeded the caller's cap.
class EnumerationLimitError : public std::runtime_error {
public:
    explicit EnumerationLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace graphmeasure
