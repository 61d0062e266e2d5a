#pragma once

#include <utility>
#include <vector>

#include "maxalg/matrix.hpp"
#include "maxalg/permutation.hpp"
#include "maxalg/scalar.hpp"
#include "maxalg/vector.hpp"

namespace maxalg {

// a (+) b: elementwise maximum. Shapes must match.
MaxVector oplus(const MaxVector& a, const MaxVector& b);
MaxMatrix oplus(const MaxMatrix& a, const MaxMatrix& b);

// A (x) B: (A (x) B)(i,j) = max_k a(i,k) * b(k,j). Inner dimensions must match.
MaxMatrix otimes(const MaxMatrix& a, const MaxMatrix& b);
MaxVector otimes(const MaxMatrix& a, const MaxVector& x);

// alpha * A: every entry multiplied by alpha.
MaxVector scale(Scalar alpha, const MaxVector& v);
MaxMatrix scale(Scalar alpha, const MaxMatrix& a);

// The induced partial order: a <= b iff a (+) b = b, i.e. entrywise.
bool le(const MaxVector& a, const MaxVector& b, const Tolerance& tol = {});
bool le(const MaxMatrix& a, const MaxMatrix& b, const Tolerance& tol = {});

struct StandardVectors {
  MaxVector ones;
  MaxVector zeros;
  std::vector<MaxVector> units;
};

// The all-ones vector, the zero vector and the unit vectors e_1..e_n.
StandardVectors standard_vectors(std::size_t n);
MaxVector ones(std::size_t n);
MaxVector unit_vector(std::size_t n, std::size_t i);

// Block-diagonal assembly; the 0x0 matrix is the neutral element.
MaxMatrix direct_sum(const MaxMatrix& a, const MaxMatrix& b);

MaxMatrix transpose(const MaxMatrix& a);

MaxVector concat(const MaxVector& a, const MaxVector& b);

namespace detail {

void check_convex_coefficients(const std::vector<double>& alphas, const Tolerance& tol);

inline std::size_t shape_key(const MaxVector& v) { return v.dim(); }
inline std::pair<std::size_t, std::size_t> shape_key(const MaxMatrix& a) {
  return {a.rows(), a.cols()};
}

}  // namespace detail

/// (+)_i alpha_i * v_i with (+)_i alpha_i = 1. Works for vectors and matrices.
template <typename T>
T max_convex_combination(const std::vector<std::pair<Scalar, T>>& terms,
                         const Tolerance& tol = {}) {
  if (terms.empty()) {
    throw validation_error("max-convex combination requires at least one term");
  }
  std::vector<double> alphas;
  alphas.reserve(terms.size());
  for (const auto& [alpha, value] : terms) {
    alphas.push_back(alpha.value());
    if (detail::shape_key(value) != detail::shape_key(terms.front().second)) {
      throw dimension_error("max-convex combination terms must share one shape");
    }
  }
  detail::check_convex_coefficients(alphas, tol);
  T acc = scale(terms.front().first, terms.front().second);
  for (std::size_t i = 1; i < terms.size(); ++i) {
    acc = oplus(acc, scale(terms[i].first, terms[i].second));
  }
  return acc;
}

}  // namespace maxalg
