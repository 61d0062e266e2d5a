#pragma once

#include <cstddef>
#include <vector>

#include "maxalg/matrix.hpp"

namespace maxalg {

/// Bijection on {0..n-1}. Indices are 0-based internally; the CLI layer
/// renders them 1-based.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> mapping);
  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, std::size_t a, std::size_t b);

  std::size_t size() const { return mapping_.size(); }
  std::size_t operator()(std::size_t i) const { return mapping_[i]; }
  const std::vector<std::size_t>& mapping() const { return mapping_; }

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> mapping_;
};

/// compose(f, g) maps i to g(f(i)), so that
/// permutation_matrix(compose(f, g)) = permutation_matrix(f) (x) permutation_matrix(g).
Permutation compose(const Permutation& f, const Permutation& g);

/// (0,1)-matrix P with P(i, sigma(i)) = 1. Left-multiplying satisfies
/// (P (x) A)(i, j) = A(sigma(i), j).
MaxMatrix permutation_matrix(const Permutation& sigma);

}  // namespace maxalg
