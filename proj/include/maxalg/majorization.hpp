#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "maxalg/matrix.hpp"
#include "maxalg/scalar.hpp"
#include "maxalg/vector.hpp"

namespace maxalg {

/// A max-doubly stochastic matrix certifying x = D (x) y, together with the
/// pivot indices used by the construction: k = argmax x, l = argmax y,
/// m = argmin y (smallest index on ties).
struct MajorizationWitness {
  MaxMatrix matrix;
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t m = 0;
};

/// x is max-majorized by y iff max(x) = max(y) and min(x) >= min(y).
bool majorizes_check(const MaxVector& x, const MaxVector& y, const Tolerance& tol = {});

/// Constructive witness: row k all ones, column m all ones, column l set to
/// x_i / y_l, zeros elsewhere. Throws when x is not majorized by y. The
/// degenerate y = 0 case (then necessarily x = 0) gets the identity witness.
MajorizationWitness witness(const MaxVector& x, const MaxVector& y,
                            const Tolerance& tol = {});

/// Like witness(), but reports failure as nullopt instead of throwing.
std::optional<MajorizationWitness> try_witness(const MaxVector& x, const MaxVector& y,
                                               const Tolerance& tol = {});

/// The n generator vectors of {x | x majorized by y}: y^(i) carries y_max at
/// position i and y_min elsewhere, realized by D^(i) (x) y.
struct HullDescription {
  double y_min = 0.0;
  double y_max = 0.0;
  std::vector<MaxVector> generators;
  std::vector<MaxMatrix> generator_matrices;
};

HullDescription hull(const MaxVector& y);

/// Coefficients alpha_i = x_i / y_max expressing x as a max-convex
/// combination of the hull generators, or nullopt when x lies outside.
std::optional<std::vector<Scalar>> hull_membership(const MaxVector& x, const MaxVector& y,
                                                   const Tolerance& tol = {});

struct AxisBounds {
  double lo = 0.0;
  double hi = 0.0;
};

/// Grid points in row-major order (first axis slowest) with one
/// inside/outside label each.
struct RegionSample {
  std::vector<MaxVector> grid_points;
  std::vector<bool> labels;
  double step = 0.0;
  std::vector<AxisBounds> bounds;
};

/// Labels every grid point lo_d + t*step (both endpoints included) by the
/// majorization predicate against y.
RegionSample region_sample(const MaxVector& y, double step,
                           const std::vector<AxisBounds>& bounds,
                           const Tolerance& tol = {});

/// A is max-doubly stochastic iff A (x) x is majorized by x for every x;
/// the finite test set {ones, e_1..e_n} decides it.
bool is_mds_via_majorization(const MaxMatrix& a, const Tolerance& tol = {});

}  // namespace maxalg
