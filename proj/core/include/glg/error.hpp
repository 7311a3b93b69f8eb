#ifndef GLG_ERROR_HPP
#define GLG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace glg {

/// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by parse_graph with a 1-based line/column position.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                ": " + message),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Raised when a configured enumeration budget would be exceeded.
/// Never a silent approximation: callers either raise the budget or lower N.
class BudgetError : public Error {
public:
    BudgetError(const std::string& message, int degree)
        : Error(message), degree_(degree) {}

    /// Degree at which the budget was hit.
    int degree() const { return degree_; }

private:
    int degree_;
};

}  // namespace glg

#endif
