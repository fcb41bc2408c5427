#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdist {

// Argument outside the domain of a formula (negative dimension, bad degree cap, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed text input. `line()` is 1-based, 0 when the input is a single expression.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A point configuration that violates its invariants (off the sphere, duplicates, too few points).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sdist
