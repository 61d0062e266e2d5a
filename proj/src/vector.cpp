#include "maxalg/vector.hpp"

#include <algorithm>

namespace maxalg {

namespace {

double checked_entry(double v) {
  return Scalar(v).value();
}

}  // namespace

MaxVector::MaxVector(std::size_t dim, double fill) {
  if (dim == 0) {
    throw validation_error("vector dimension must be positive");
  }
  entries_.assign(dim, checked_entry(fill));
}

MaxVector::MaxVector(std::initializer_list<double> entries) {
  if (entries.size() == 0) {
    throw validation_error("vector dimension must be positive");
  }
  entries_.reserve(entries.size());
  for (double v : entries) entries_.push_back(checked_entry(v));
}

MaxVector MaxVector::from_entries(std::vector<double> entries) {
  if (entries.empty()) {
    throw validation_error("vector dimension must be positive");
  }
  for (double v : entries) checked_entry(v);
  MaxVector out(entries.size());
  out.entries_ = std::move(entries);
  return out;
}

void MaxVector::set(std::size_t i, double value) {
  entries_.at(i) = checked_entry(value);
}

double MaxVector::max_entry() const {
  return *std::max_element(entries_.begin(), entries_.end());
}

double MaxVector::min_entry() const {
  return *std::min_element(entries_.begin(), entries_.end());
}

bool MaxVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](double v) { return v == 0.0; });
}

bool approx_equal(const MaxVector& a, const MaxVector& b, const Tolerance& tol) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!tol.eq(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace maxalg
