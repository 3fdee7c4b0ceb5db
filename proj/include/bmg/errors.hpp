#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bmg {

/// Malformed or out-of-contract input: unknown ids, violated preconditions,
/// inconsistent color maps. Mathematical rejection is never signalled this way.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parse failure in one of the text formats. Line and column are 1-based.
class ParseError : public InputError {
 public:
  ParseError(const std::string &what, std::size_t line, std::size_t column)
      : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace bmg
