#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hist {

// Malformed textual input. line() is 1-based; 0 when the format has no lines.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A vertex id outside the host graph's range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// An operation was called outside its domain (disconnected input, empty cut side, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace hist
