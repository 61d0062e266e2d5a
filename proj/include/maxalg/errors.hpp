#pragma once

#include <stdexcept>

namespace maxalg {

// Base class of every error thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes are incompatible (product inner dimensions, elementwise ops).
class dimension_error : public error {
 public:
  using error::error;
};

// A value or precondition violates a documented invariant.
class validation_error : public error {
 public:
  using error::error;
};

// Input text could not be parsed.
class parse_error : public error {
 public:
  using error::error;
};

// A brute-force search or enumeration exceeds its configured budget.
class capacity_error : public error {
 public:
  using error::error;
};

}  // namespace maxalg
