#include "maxalg/permutation.hpp"

#include <algorithm>

#include "maxalg/errors.hpp"

namespace maxalg {

Permutation::Permutation(std::vector<std::size_t> mapping)
    : mapping_(std::move(mapping)) {
  if (mapping_.empty()) {
    throw validation_error("permutation size must be positive");
  }
  std::vector<bool> seen(mapping_.size(), false);
  for (std::size_t image : mapping_) {
    if (image >= mapping_.size() || seen[image]) {
      throw validation_error("permutation mapping must be a bijection");
    }
    seen[image] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> mapping(n);
  for (std::size_t i = 0; i < n; ++i) mapping[i] = i;
  return Permutation(std::move(mapping));
}

Permutation Permutation::transposition(std::size_t n, std::size_t a, std::size_t b) {
  Permutation p = identity(n);
  std::swap(p.mapping_.at(a), p.mapping_.at(b));
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(mapping_.size());
  for (std::size_t i = 0; i < mapping_.size(); ++i) inv[mapping_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) {
    throw dimension_error("composed permutations must have equal size");
  }
  std::vector<std::size_t> mapping(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) mapping[i] = g(f(i));
  return Permutation(std::move(mapping));
}

MaxMatrix permutation_matrix(const Permutation& sigma) {
  MaxMatrix p(sigma.size(), sigma.size(), 0.0);
  for (std::size_t i = 0; i < sigma.size(); ++i) p.set(i, sigma(i), 1.0);
  return p;
}

}  // namespace maxalg
