#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bsk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax errors carry the 0-based character offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), message_(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised when a configured pair/degree/matrix cap is hit. Never a partial result.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace bsk
