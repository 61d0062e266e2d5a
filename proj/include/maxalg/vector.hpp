#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "maxalg/scalar.hpp"

namespace maxalg {

/// Dense vector over the max-times semiring. Entries are finite
/// nonnegative reals; the dimension is at least 1.
class MaxVector {
 public:
  explicit MaxVector(std::size_t dim, double fill = 0.0);
  MaxVector(std::initializer_list<double> entries);
  static MaxVector from_entries(std::vector<double> entries);

  std::size_t dim() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  void set(std::size_t i, double value);

  double max_entry() const;
  double min_entry() const;
  bool is_zero() const;  // every entry exactly 0

  const std::vector<double>& entries() const { return entries_; }

  friend bool operator==(const MaxVector&, const MaxVector&) = default;

 private:
  std::vector<double> entries_;
};

bool approx_equal(const MaxVector& a, const MaxVector& b, const Tolerance& tol);

}  // namespace maxalg
