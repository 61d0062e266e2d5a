#pragma once

#include <algorithm>
#include <cmath>
#include <compare>

#include "maxalg/errors.hpp"

namespace maxalg {

/// Element of the max-times semiring: a finite nonnegative real.
/// Infinities, NaNs and negative values are rejected at construction.
class Scalar {
 public:
  constexpr Scalar() = default;
  Scalar(double value) : value_(checked(value)) {}

  double value() const { return value_; }

  friend bool operator==(Scalar a, Scalar b) { return a.value_ == b.value_; }
  friend auto operator<=>(Scalar a, Scalar b) { return a.value_ <=> b.value_; }

 private:
  static double checked(double v) {
    if (!std::isfinite(v) || v < 0.0) {
      throw validation_error("scalar must be a finite nonnegative real");
    }
    return v;
  }

  double value_ = 0.0;
};

inline Scalar oplus(Scalar a, Scalar b) { return std::max(a.value(), b.value()); }
inline Scalar otimes(Scalar a, Scalar b) { return a.value() * b.value(); }

/// Floating-point comparison policy. Equality is hybrid:
/// |a-b| <= eps * max(1, a, b), which behaves absolutely near the
/// unit scale of stochastic entries and relatively for large values.
class Tolerance {
 public:
  Tolerance() = default;
  explicit Tolerance(double epsilon) : epsilon_(epsilon) {
    if (!std::isfinite(epsilon) || epsilon < 0.0) {
      throw validation_error("tolerance epsilon must be a finite nonnegative real");
    }
  }

  double epsilon() const { return epsilon_; }

  bool eq(double a, double b) const {
    return std::abs(a - b) <= epsilon_ * std::max({1.0, a, b});
  }
  bool le(double a, double b) const { return a <= b || eq(a, b); }
  bool ge(double a, double b) const { return le(b, a); }

  bool is_one(double a) const { return eq(a, 1.0); }
  bool is_zero(double a) const { return eq(a, 0.0); }

 private:
  double epsilon_ = 1e-9;
};

}  // namespace maxalg
