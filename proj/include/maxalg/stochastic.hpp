#pragma once

#include <cstdint>
#include <vector>

#include "maxalg/matrix.hpp"
#include "maxalg/scalar.hpp"
#include "maxalg/vector.hpp"

namespace maxalg {

enum class Axis { Row, Column };

struct StochasticViolation {
  Axis axis;
  std::size_t index;  // 0-based
  double max_value;
};

/// Row/column/doubly stochastic membership facts for one matrix,
/// with one violation record per failing row or column.
struct StochasticClass {
  bool row = false;
  bool column = false;
  bool doubly = false;
  std::vector<StochasticViolation> violations;
};

/// Row flag: every row maximum equals 1 within tolerance; column flag
/// likewise per column. doubly = row and column.
StochasticClass classify(const MaxMatrix& d, const Tolerance& tol = {});

/// Maximum entry of x.
double trace(const MaxVector& x);

/// Every column maximum equals 1 within tolerance. This finite test over
/// the unit vectors is equivalent to preserving the trace of every vector;
/// the universal form is exercised by property tests.
bool is_trace_preserving(const MaxMatrix& a, const Tolerance& tol = {});

/// A (x) ones = ones within tolerance.
bool is_unital_preserving(const MaxMatrix& a, const Tolerance& tol = {});

/// Deterministic max-doubly-stochastic generator: a random permutation
/// backbone of 1-entries plus off-backbone values in [0,1) at the given
/// density. Same (n, seed, fill_density) always yields the same matrix.
MaxMatrix random_mds(std::size_t n, std::uint64_t seed, double fill_density);

}  // namespace maxalg
