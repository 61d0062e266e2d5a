#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "maxalg/matrix.hpp"
#include "maxalg/vector.hpp"

namespace maxalg::oracle {

/// Hard limits checked before any exponential search starts.
struct OracleBudget {
  std::size_t max_dim = 4;
  std::size_t max_candidates = 50'000'000;
};

/// Maximum geometric mean over explicitly enumerated simple cycles.
/// Deliberately slow and independent of the spectral module.
double brute_cycle_radius(const MaxMatrix& a, const OracleBudget& budget = {6});

/// Exhaustive filter of all 2^(n*n) zero/one patterns: keeps the
/// max-doubly stochastic ones for which at most one 1-entry can be
/// lowered below 1 without breaking membership. Pattern-sorted.
std::vector<MaxMatrix> brute_extreme_points(std::size_t n, const OracleBudget& budget = {4});

/// Exhaustive search for a max-doubly stochastic D with D (x) y = x over a
/// finite per-row candidate entry set; nullopt when no such D exists.
std::optional<MaxMatrix> brute_majorization_witness(const MaxVector& x, const MaxVector& y,
                                                    const OracleBudget& budget = {3});

/// ||A^k (x) x||^(1/k) evaluated at k = steps in log domain; exactly 0 as
/// soon as the iterate becomes the zero vector.
double iterative_local_radius(const MaxMatrix& a, const MaxVector& x, std::size_t steps);

}  // namespace maxalg::oracle
