#include "maxalg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "maxalg/errors.hpp"
#include "maxalg/semiring.hpp"

namespace maxalg {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_square(const MaxMatrix& a) {
  if (!a.is_square()) {
    throw dimension_error("operation requires a square matrix");
  }
}

std::vector<double> maxplus_multiply(const std::vector<double>& a,
                                     const std::vector<double>& b,
                                     std::size_t n) {
  std::vector<double> c(n * n, kNegInf);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a[i * n + k];
      if (aik == kNegInf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        c[i * n + j] = std::max(c[i * n + j], aik + b[k * n + j]);
      }
    }
  }
  return c;
}

// Best cycle mean over the nodes listed in `support`, restricted to edges
// inside the support set; -inf when acyclic. Cycle products are accumulated
// in log domain so long cycles cannot under/overflow.
double best_cycle_log_mean(const MaxMatrix& a, const std::vector<std::size_t>& support) {
  const std::size_t n = support.size();
  if (n == 0) return kNegInf;
  std::vector<double> base(n * n, kNegInf);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = a(support[i], support[j]);
      if (v > 0.0) base[i * n + j] = std::log(v);
    }
  }
  double best = kNegInf;
  std::vector<double> power = base;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const double diag = power[i * n + i];
      if (diag != kNegInf) best = std::max(best, diag / static_cast<double>(k));
    }
    if (k < n) power = maxplus_multiply(power, base, n);
  }
  return best;
}

// reach[i][j]: a directed path of length >= 1 from i to j exists.
std::vector<std::vector<bool>> positive_reachability(const MaxMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) reach[i][j] = a(i, j) > 0.0;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  return reach;
}

// r at every unit vector, in one pass: group nodes into strongly connected
// components, compute each component's best cycle mean, then give every
// coordinate the best mean among components that reach it.
std::vector<double> unit_local_radii(const MaxMatrix& a) {
  require_square(a);
  const std::size_t n = a.rows();
  const auto reach = positive_reachability(a);

  std::vector<int> component(n, -1);
  std::vector<std::vector<std::size_t>> components;
  for (std::size_t i = 0; i < n; ++i) {
    if (component[i] >= 0) continue;
    const int id = static_cast<int>(components.size());
    components.emplace_back();
    for (std::size_t j = i; j < n; ++j) {
      const bool same = (i == j) || (reach[i][j] && reach[j][i]);
      if (component[j] < 0 && same) {
        component[j] = id;
        components[id].push_back(j);
      }
    }
  }

  std::vector<double> component_mean(components.size());
  for (std::size_t c = 0; c < components.size(); ++c) {
    component_mean[c] = best_cycle_log_mean(a, components[c]);
  }

  std::vector<double> radii(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double best = kNegInf;
    for (std::size_t c = 0; c < components.size(); ++c) {
      if (component_mean[c] == kNegInf) continue;
      for (std::size_t u : components[c]) {
        if (u == i || reach[u][i]) {
          best = std::max(best, component_mean[c]);
          break;
        }
      }
    }
    radii[i] = best == kNegInf ? 0.0 : std::exp(best);
  }
  return radii;
}

}  // namespace

double spectral_radius(const MaxMatrix& a) {
  require_square(a);
  if (a.is_empty()) return 0.0;
  std::vector<std::size_t> all(a.rows());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const double best = best_cycle_log_mean(a, all);
  return best == kNegInf ? 0.0 : std::exp(best);
}

double norm(const MaxMatrix& a) { return a.max_entry(); }

bool is_eigenpair(const MaxMatrix& a, const MaxVector& x, Scalar lambda,
                  const Tolerance& tol) {
  if (x.is_zero()) {
    throw validation_error("eigenpair check requires a nonzero vector");
  }
  return approx_equal(otimes(a, x), scale(lambda, x), tol);
}

double local_spectral_radius(const MaxMatrix& a, const MaxVector& x) {
  require_square(a);
  if (a.rows() != x.dim()) {
    throw dimension_error("matrix and vector dimensions must match");
  }
  if (x.is_zero()) {
    throw validation_error("local spectral radius requires a nonzero vector");
  }
  const auto radii = unit_local_radii(a);
  double best = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i] > 0.0) best = std::max(best, radii[i]);
  }
  return best;
}

bool is_irreducible(const MaxMatrix& a) {
  require_square(a);
  const std::size_t n = a.rows();
  if (n <= 1) return true;
  const auto reach = positive_reachability(a);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && !reach[i][j]) return false;
    }
  }
  return true;
}

SpectralReport spectral_report(const MaxMatrix& a) {
  SpectralReport report;
  report.local_radii = unit_local_radii(a);
  report.radius = spectral_radius(a);
  report.norm = norm(a);
  report.irreducible = is_irreducible(a);
  return report;
}

}  // namespace maxalg
