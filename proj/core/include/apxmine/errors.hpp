#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apxmine {

// Raised when input text cannot be parsed. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message, std::size_t line = 0)
      : std::runtime_error(message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Raised when well-formed input refers to things that do not exist
// (unknown item id, missing report field, ...).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an exact enumeration would exceed its size guard. Oracles are
// exact or absent; they refuse instead of truncating.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace apxmine
