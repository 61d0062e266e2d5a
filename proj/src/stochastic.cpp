#include "maxalg/stochastic.hpp"

#include <random>

#include "maxalg/errors.hpp"
#include "maxalg/semiring.hpp"

namespace maxalg {

namespace {

void require_square(const MaxMatrix& a) {
  if (!a.is_square()) {
    throw dimension_error("stochastic predicates require a square matrix");
  }
}

// Hand-rolled draws keep generated matrices identical across standard
// library implementations; std::uniform_* distributions are not portable.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

}  // namespace

StochasticClass classify(const MaxMatrix& d, const Tolerance& tol) {
  require_square(d);
  StochasticClass out;
  out.row = true;
  out.column = true;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    const double m = d.row_max(i);
    if (!tol.is_one(m)) {
      out.row = false;
      out.violations.push_back({Axis::Row, i, m});
    }
  }
  for (std::size_t j = 0; j < d.cols(); ++j) {
    const double m = d.col_max(j);
    if (!tol.is_one(m)) {
      out.column = false;
      out.violations.push_back({Axis::Column, j, m});
    }
  }
  out.doubly = out.row && out.column;
  return out;
}

double trace(const MaxVector& x) { return x.max_entry(); }

bool is_trace_preserving(const MaxMatrix& a, const Tolerance& tol) {
  require_square(a);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (!tol.is_one(a.col_max(j))) return false;
  }
  return true;
}

bool is_unital_preserving(const MaxMatrix& a, const Tolerance& tol) {
  require_square(a);
  if (a.is_empty()) return true;
  return approx_equal(otimes(a, ones(a.rows())), ones(a.rows()), tol);
}

MaxMatrix random_mds(std::size_t n, std::uint64_t seed, double fill_density) {
  if (n == 0) {
    throw validation_error("random_mds requires n >= 1");
  }
  if (!(fill_density >= 0.0 && fill_density <= 1.0)) {
    throw validation_error("fill density must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);

  // Fisher-Yates permutation backbone guarantees a 1 in every row and column.
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[uniform_index(rng, i)]);
  }

  MaxMatrix d(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) d.set(i, perm[i], 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == perm[i]) continue;
      if (uniform01(rng) < fill_density) d.set(i, j, uniform01(rng));
    }
  }
  return d;
}

}  // namespace maxalg
