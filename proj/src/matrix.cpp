#include "maxalg/matrix.hpp"

#include <algorithm>

namespace maxalg {

namespace {

double checked_entry(double v) {
  return Scalar(v).value();
}

void check_shape(std::size_t rows, std::size_t cols) {
  // Only the 0x0 empty matrix is allowed besides fully positive shapes.
  if ((rows == 0) != (cols == 0)) {
    throw validation_error("matrix shape must be n x m with n, m >= 1, or 0 x 0");
  }
}

}  // namespace

MaxMatrix::MaxMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols) {
  check_shape(rows, cols);
  data_.assign(rows * cols, checked_entry(fill));
}

MaxMatrix::MaxMatrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  check_shape(rows_, cols_);
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw dimension_error("matrix rows must all have the same length");
    }
    for (double v : row) data_.push_back(checked_entry(v));
  }
}

MaxMatrix MaxMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  MaxMatrix out;
  out.rows_ = rows.size();
  out.cols_ = rows.empty() ? 0 : rows.front().size();
  check_shape(out.rows_, out.cols_);
  out.data_.reserve(out.rows_ * out.cols_);
  for (const auto& row : rows) {
    if (row.size() != out.cols_) {
      throw dimension_error("matrix rows must all have the same length");
    }
    for (double v : row) out.data_.push_back(checked_entry(v));
  }
  return out;
}

MaxMatrix MaxMatrix::identity(std::size_t n) {
  MaxMatrix out(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) out.data_[i * n + i] = 1.0;
  return out;
}

void MaxMatrix::set(std::size_t i, std::size_t j, double value) {
  data_.at(i * cols_ + j) = checked_entry(value);
}

double MaxMatrix::max_entry() const {
  if (data_.empty()) return 0.0;
  return *std::max_element(data_.begin(), data_.end());
}

double MaxMatrix::row_max(std::size_t i) const {
  double best = 0.0;
  for (std::size_t j = 0; j < cols_; ++j) best = std::max(best, (*this)(i, j));
  return best;
}

double MaxMatrix::col_max(std::size_t j) const {
  double best = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) best = std::max(best, (*this)(i, j));
  return best;
}

MaxVector MaxMatrix::column(std::size_t j) const {
  MaxVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.set(i, (*this)(i, j));
  return out;
}

bool approx_equal(const MaxMatrix& a, const MaxMatrix& b, const Tolerance& tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    if (!tol.eq(a.data()[i], b.data()[i])) return false;
  }
  return true;
}

}  // namespace maxalg
