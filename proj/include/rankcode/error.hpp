#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rankcode {

// Bad input: malformed parameters, mismatched fields, violated preconditions.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive computation would exceed the configured enumeration budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed code-definition text; line is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Limit on exhaustive work, expressed as log2 of the number of enumerated items.
struct Budget {
  unsigned max_enum_bits = 24;

  // RANKCODE_MAX_ENUM_BITS overrides the default when set to a number.
  static Budget from_env();

  bool allows(double log2_items) const { return log2_items <= max_enum_bits + 1e-9; }
  void require(double log2_items, const char* what) const;
};

}  // namespace rankcode
