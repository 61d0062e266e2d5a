#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "maxalg/scalar.hpp"
#include "maxalg/vector.hpp"

namespace maxalg {

/// Dense row-major matrix over the max-times semiring. Entries are finite
/// nonnegative reals. The 0x0 matrix is permitted as the neutral element
/// of the direct sum; 0xk and kx0 shapes are not.
class MaxMatrix {
 public:
  MaxMatrix() = default;  // 0x0
  MaxMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  MaxMatrix(std::initializer_list<std::initializer_list<double>> rows);
  static MaxMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static MaxMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_empty() const { return rows_ == 0; }

  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, double value);

  double max_entry() const;  // 0 for the empty matrix
  double row_max(std::size_t i) const;
  double col_max(std::size_t j) const;
  MaxVector column(std::size_t j) const;

  const std::vector<double>& data() const { return data_; }

  friend bool operator==(const MaxMatrix&, const MaxMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

bool approx_equal(const MaxMatrix& a, const MaxMatrix& b, const Tolerance& tol);

}  // namespace maxalg
