#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jagg {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (formula, agenda, profile or preference file).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Instance exceeds a configured size limit (atoms, issues, reversal budget, ...).
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates a precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace jagg
