#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monent {

// Bad user input: malformed files, unknown labels, empty generator lists.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in a presentation file or generator expression. Line and
// column are 1-based.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A runtime certificate check failed (degree certificate, exactness of
// a syzygy, ...). Always an implementation bug, never a user error.
class CertificateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// enumerate_legal was asked for more words than its budget allows.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace monent
