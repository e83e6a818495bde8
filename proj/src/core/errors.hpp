// errors.hpp -- exception types shared across the library
#pragma once

#include <stdexcept>
#include <string>

namespace moddiag {

/// Malformed model or argument (bad alphabet, attribute conflict, invalid
/// partition, mask outside the alphabet, ...).
class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Syntax or semantic error in an .fsm document. Carries 1-based line/column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column = 0)
      : std::runtime_error(format(msg, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& msg, int line, int column) {
    std::string out = "line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
    return out + ": " + msg;
  }

  int line_;
  int column_;
};

}  // namespace moddiag
