#pragma once

#include <vector>

#include "maxalg/matrix.hpp"
#include "maxalg/scalar.hpp"
#include "maxalg/vector.hpp"

namespace maxalg {

struct SpectralReport {
  double radius = 0.0;
  std::vector<double> local_radii;  // r at e_1..e_n
  double norm = 0.0;
  bool irreducible = false;
};

/// Maximum cycle geometric mean, taken over simple cycles of the weighted
/// digraph of A (edge u->v present when a(u,v) > 0). Internally evaluates
/// the diagonals of the max-times powers A, A^2, ..., A^n in log domain;
/// an acyclic digraph yields 0.
double spectral_radius(const MaxMatrix& a);

/// Largest entry of A (all entries are nonnegative).
double norm(const MaxMatrix& a);

/// True iff A (x) x = lambda * x within tolerance. x must be nonzero.
bool is_eigenpair(const MaxMatrix& a, const MaxVector& x, Scalar lambda,
                  const Tolerance& tol = {});

/// Growth rate of ||A^k (x) x||^(1/k): the best cycle geometric mean among
/// cycles from which some supporting coordinate of x is reachable along
/// directed edges. Returns 0 when no such cycle exists.
double local_spectral_radius(const MaxMatrix& a, const MaxVector& x);

/// True iff the digraph of positive entries is strongly connected
/// (trivially true for n = 1).
bool is_irreducible(const MaxMatrix& a);

SpectralReport spectral_report(const MaxMatrix& a);

}  // namespace maxalg
