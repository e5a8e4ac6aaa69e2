#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace roadperc {

// Bad input data: malformed files, out-of-range values, violated
// preconditions on user-supplied parameters. The CLI maps these to exit 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A syntax error in an input file, tagged with its 1-based line number.
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace roadperc
