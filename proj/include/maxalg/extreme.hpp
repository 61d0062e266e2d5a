#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "maxalg/matrix.hpp"
#include "maxalg/permutation.hpp"
#include "maxalg/scalar.hpp"

namespace maxalg {

/// Classification of a 1-entry of a (0,1)-matrix by its line pattern.
enum class EntryClass {
  RowSingleton,     // only 1 in its row, column holds another 1
  ColumnSingleton,  // only 1 in its column, row holds another 1
  BothSingleton,    // only 1 in both its row and its column
  NonSingleton,     // row and column each hold another 1
};

using SingletonProfile = std::map<std::pair<std::size_t, std::size_t>, EntryClass>;

/// Classifies every 1-entry of a (0,1)-matrix. Entries must be within
/// tolerance of 0 or 1; anything else raises a validation error naming
/// the offending entry.
SingletonProfile singleton_profile(const MaxMatrix& e, const Tolerance& tol = {});

/// True iff E is max-doubly stochastic, is a (0,1)-matrix, and carries at
/// most one non-singleton 1-entry.
bool is_max_extreme(const MaxMatrix& e, const Tolerance& tol = {});

enum class BlockKind { Hook, Column, Row };

/// Building block of a canonical extreme form: Column(m) is the m x 1
/// all-ones matrix, Row(n) the 1 x n all-ones matrix, and Hook(q, r) the
/// q x r matrix with all-ones first row and first column (q, r > 1).
struct BlockSpec {
  BlockKind kind;
  std::size_t rows;
  std::size_t cols;

  static BlockSpec column(std::size_t m) { return {BlockKind::Column, m, 1}; }
  static BlockSpec row(std::size_t n) { return {BlockKind::Row, 1, n}; }
  static BlockSpec hook(std::size_t q, std::size_t r) { return {BlockKind::Hook, q, r}; }

  friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
};

/// Direct sum of the realized blocks, in order. The list must be nonempty,
/// contain at most one Hook, and if a Hook is present it comes first.
MaxMatrix realize(const std::vector<BlockSpec>& blocks);

/// Every max-extreme point of the n x n max-doubly stochastic matrices,
/// as a deduplicated, pattern-sorted list. n above the bound raises a
/// capacity error.
std::vector<MaxMatrix> enumerate_extreme(std::size_t n, std::size_t bound = 5);

/// Factorization E = P_left (x) realize(blocks) (x) P_right with blocks in
/// canonical order: Hook first when present, then Column blocks by
/// descending size, then Row blocks by descending size.
struct ExtremeDecomposition {
  Permutation p_left;
  std::vector<BlockSpec> blocks;
  Permutation p_right;
};

/// Peels E into its canonical block form. E must be max-extreme; the
/// factorization is not unique, so only exact reconstruction is promised.
ExtremeDecomposition decompose_extreme(const MaxMatrix& e, const Tolerance& tol = {});

/// Two max-doubly stochastic matrices, distinct from E, whose max-convex
/// combination alpha1 D1 (+) alpha2 D2 reproduces E.
struct NonExtremalityWitness {
  MaxMatrix d1;
  MaxMatrix d2;
  Scalar alpha1;
  Scalar alpha2;
};

/// For a max-doubly stochastic E, produces a witness pair proving E is not
/// max-extreme, or nothing iff E is extreme. A fractional entry e in (0,1)
/// yields the pair (entry -> 0, entry -> 1) with coefficients (1, e); a
/// (0,1)-matrix with two or more non-singleton entries yields two copies
/// that each lower one of them to 0.5, with coefficients (1, 1).
std::optional<NonExtremalityWitness> non_extremality_witness(const MaxMatrix& e,
                                                             const Tolerance& tol = {});

}  // namespace maxalg
