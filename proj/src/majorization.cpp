#include "maxalg/majorization.hpp"

#include <algorithm>
#include <cmath>

#include "maxalg/errors.hpp"
#include "maxalg/semiring.hpp"
#include "maxalg/stochastic.hpp"

namespace maxalg {

namespace {

void require_same_dim(const MaxVector& x, const MaxVector& y) {
  if (x.dim() != y.dim()) {
    throw dimension_error("vector dimensions must match");
  }
}

std::size_t argmax(const MaxVector& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.dim(); ++i) {
    if (v[i] > v[best]) best = i;
  }
  return best;
}

std::size_t argmin(const MaxVector& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.dim(); ++i) {
    if (v[i] < v[best]) best = i;
  }
  return best;
}

}  // namespace

bool majorizes_check(const MaxVector& x, const MaxVector& y, const Tolerance& tol) {
  require_same_dim(x, y);
  return tol.eq(x.max_entry(), y.max_entry()) && tol.ge(x.min_entry(), y.min_entry());
}

MajorizationWitness witness(const MaxVector& x, const MaxVector& y, const Tolerance& tol) {
  if (!majorizes_check(x, y, tol)) {
    throw validation_error("x is not max-majorized by y");
  }
  const std::size_t n = x.dim();

  if (y.max_entry() == 0.0) {
    // y = 0 forces x = 0; the identity certifies it without dividing by y_l.
    return MajorizationWitness{MaxMatrix::identity(n), argmax(x), 0, 0};
  }

  const std::size_t k = argmax(x);
  const std::size_t l = argmax(y);
  const std::size_t m = argmin(y);

  MaxMatrix d(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    d.set(i, l, std::min(x[i] / y[l], 1.0));
  }
  for (std::size_t i = 0; i < n; ++i) d.set(i, m, 1.0);
  for (std::size_t j = 0; j < n; ++j) d.set(k, j, 1.0);
  return MajorizationWitness{std::move(d), k, l, m};
}

std::optional<MajorizationWitness> try_witness(const MaxVector& x, const MaxVector& y,
                                               const Tolerance& tol) {
  if (!majorizes_check(x, y, tol)) return std::nullopt;
  return witness(x, y, tol);
}

HullDescription hull(const MaxVector& y) {
  const std::size_t n = y.dim();
  HullDescription out;
  out.y_min = y.min_entry();
  out.y_max = y.max_entry();
  const std::size_t min_index = argmin(y);
  for (std::size_t i = 0; i < n; ++i) {
    MaxVector generator(n, out.y_min);
    generator.set(i, out.y_max);
    out.generators.push_back(std::move(generator));

    MaxMatrix d(n, n, 0.0);
    for (std::size_t r = 0; r < n; ++r) d.set(r, min_index, 1.0);
    for (std::size_t c = 0; c < n; ++c) d.set(i, c, 1.0);
    out.generator_matrices.push_back(std::move(d));
  }
  return out;
}

std::optional<std::vector<Scalar>> hull_membership(const MaxVector& x, const MaxVector& y,
                                                   const Tolerance& tol) {
  require_same_dim(x, y);
  const std::size_t n = x.dim();
  const double y_max = y.max_entry();
  const double y_min = y.min_entry();

  if (y_max == 0.0) {
    if (!x.is_zero()) return std::nullopt;
    return std::vector<Scalar>(n, Scalar(1.0));
  }

  std::vector<double> alphas(n);
  double alpha_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    alphas[i] = x[i] / y_max;
    alpha_sum = std::max(alpha_sum, alphas[i]);
  }
  if (!tol.is_one(alpha_sum)) return std::nullopt;

  // Evaluate the combination (+)_i alpha_i y^(i) coordinatewise.
  for (std::size_t j = 0; j < n; ++j) {
    double z = alphas[j] * y_max;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != j) z = std::max(z, alphas[i] * y_min);
    }
    if (!tol.eq(z, x[j])) return std::nullopt;
  }

  std::vector<Scalar> out;
  out.reserve(n);
  for (double a : alphas) out.push_back(Scalar(a));
  return out;
}

RegionSample region_sample(const MaxVector& y, double step,
                           const std::vector<AxisBounds>& bounds, const Tolerance& tol) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw validation_error("region step must be positive and finite");
  }
  if (bounds.size() != y.dim()) {
    throw dimension_error("one (lo, hi) pair per axis is required");
  }
  const std::size_t n = y.dim();

  std::vector<std::size_t> counts(n);
  for (std::size_t d = 0; d < n; ++d) {
    const auto& [lo, hi] = bounds[d];
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo < 0.0 || hi < lo) {
      throw validation_error("region bounds must satisfy 0 <= lo <= hi");
    }
    // Tiny slack keeps hi on the grid when (hi - lo) / step is integral.
    counts[d] = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  }

  RegionSample sample;
  sample.step = step;
  sample.bounds = bounds;

  std::vector<std::size_t> index(n, 0);
  while (true) {
    MaxVector point(n, 0.0);
    for (std::size_t d = 0; d < n; ++d) {
      point.set(d, bounds[d].lo + static_cast<double>(index[d]) * step);
    }
    sample.labels.push_back(majorizes_check(point, y, tol));
    sample.grid_points.push_back(std::move(point));

    std::size_t d = n;
    while (d > 0) {
      --d;
      if (++index[d] < counts[d]) break;
      index[d] = 0;
      if (d == 0) return sample;
    }
  }
}

bool is_mds_via_majorization(const MaxMatrix& a, const Tolerance& tol) {
  if (!a.is_square()) {
    throw dimension_error("max-doubly stochastic test requires a square matrix");
  }
  const std::size_t n = a.rows();
  if (n == 0) return true;
  if (!majorizes_check(otimes(a, ones(n)), ones(n), tol)) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const MaxVector e = unit_vector(n, i);
    if (!majorizes_check(otimes(a, e), e, tol)) return false;
  }
  return true;
}

}  // namespace maxalg
