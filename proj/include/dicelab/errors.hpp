#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dicelab {

// Base for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Bad construction input (empty face list, duplicate label, all-zero weights, ...).
struct ValidationError : Error {
  using Error::Error;
};

// Expression text could not be parsed. `position` is a character offset into
// the source string; `expected` lists what the parser would have accepted.
struct ParseError : Error {
  std::size_t position;
  std::vector<std::string> expected;
  ParseError(const std::string &msg, std::size_t pos,
             std::vector<std::string> exp = {})
      : Error(msg), position(pos), expected(std::move(exp)) {}
};

// Expression refers to a die position outside 1..d, or similar.
struct BindError : Error {
  using Error::Error;
};

// Boolean expression where an integer one was needed, or vice versa.
struct TypeError : Error {
  using Error::Error;
};

// Enumeration or listing would exceed the configured cap.
struct CapExceededError : Error {
  using Error::Error;
};

// Degenerate numeric input (sigma <= 0, quantile outside (0,1), ...).
struct DomainError : Error {
  using Error::Error;
};

} // namespace dicelab
