#include "maxalg/extreme.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "maxalg/errors.hpp"
#include "maxalg/semiring.hpp"
#include "maxalg/stochastic.hpp"

namespace maxalg {

namespace {

// Zero/nonzero pattern of a (0,1)-matrix, judged with tolerance.
// nullopt when some entry is neither 0 nor 1.
std::optional<std::vector<bool>> try_pattern(const MaxMatrix& e, const Tolerance& tol) {
  std::vector<bool> bits(e.data().size());
  for (std::size_t i = 0; i < e.data().size(); ++i) {
    const double v = e.data()[i];
    if (tol.is_one(v)) {
      bits[i] = true;
    } else if (tol.is_zero(v)) {
      bits[i] = false;
    } else {
      return std::nullopt;
    }
  }
  return bits;
}

struct PatternView {
  const std::vector<bool>* bits;
  std::size_t rows, cols;
  bool at(std::size_t i, std::size_t j) const { return (*bits)[i * cols + j]; }
};

EntryClass classify_entry(const PatternView& p, std::size_t i, std::size_t j) {
  std::size_t row_ones = 0;
  std::size_t col_ones = 0;
  for (std::size_t c = 0; c < p.cols; ++c) row_ones += p.at(i, c);
  for (std::size_t r = 0; r < p.rows; ++r) col_ones += p.at(r, j);
  const bool row_single = row_ones == 1;
  const bool col_single = col_ones == 1;
  if (row_single && col_single) return EntryClass::BothSingleton;
  if (row_single) return EntryClass::RowSingleton;
  if (col_single) return EntryClass::ColumnSingleton;
  return EntryClass::NonSingleton;
}

void check_blocks(const std::vector<BlockSpec>& blocks) {
  if (blocks.empty()) {
    throw validation_error("block list must be nonempty");
  }
  std::size_t hooks = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const BlockSpec& spec = blocks[b];
    switch (spec.kind) {
      case BlockKind::Column:
        if (spec.rows == 0 || spec.cols != 1) {
          throw validation_error("column block must be m x 1 with m >= 1");
        }
        break;
      case BlockKind::Row:
        if (spec.cols == 0 || spec.rows != 1) {
          throw validation_error("row block must be 1 x n with n >= 1");
        }
        break;
      case BlockKind::Hook:
        ++hooks;
        if (spec.rows < 2 || spec.cols < 2) {
          throw validation_error("hook block requires q, r > 1");
        }
        if (b != 0) {
          throw validation_error("a hook block must come first");
        }
        break;
    }
  }
  if (hooks > 1) {
    throw validation_error("at most one hook block is allowed");
  }
}

MaxMatrix realize_one(const BlockSpec& spec) {
  switch (spec.kind) {
    case BlockKind::Column:
      return MaxMatrix(spec.rows, 1, 1.0);
    case BlockKind::Row:
      return MaxMatrix(1, spec.cols, 1.0);
    case BlockKind::Hook: {
      MaxMatrix hook(spec.rows, spec.cols, 0.0);
      for (std::size_t j = 0; j < spec.cols; ++j) hook.set(0, j, 1.0);
      for (std::size_t i = 0; i < spec.rows; ++i) hook.set(i, 0, 1.0);
      return hook;
    }
  }
  throw validation_error("unknown block kind");
}

// Non-increasing partitions of `total` into exactly `parts` positive parts.
void partitions_into(std::size_t total, std::size_t parts, std::size_t max_part,
                     std::vector<std::size_t>& current,
                     std::vector<std::vector<std::size_t>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(current);
    return;
  }
  if (total < parts) return;
  const std::size_t hi = std::min(max_part, total - (parts - 1));
  for (std::size_t v = hi; v >= 1; --v) {
    current.push_back(v);
    partitions_into(total - v, parts - 1, v, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<std::size_t>> partitions_into(std::size_t total, std::size_t parts) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  partitions_into(total, parts, total, current, out);
  return out;
}

// Every canonical block list realizing an n x n matrix: an optional hook
// plus column-block and row-block size partitions.
std::vector<std::vector<BlockSpec>> block_lists(std::size_t n) {
  std::vector<std::vector<BlockSpec>> lists;
  for (std::size_t q = 0; q <= n; ++q) {
    for (std::size_t r = 0; r <= n; ++r) {
      const bool hook = q != 0;
      if (hook != (r != 0)) continue;
      if (hook && (q < 2 || r < 2)) continue;
      const std::size_t rows_left = n - q;
      const std::size_t cols_left = n - r;
      for (std::size_t k = 0; k <= cols_left; ++k) {    // column blocks
        for (std::size_t t = 0; t <= rows_left; ++t) {  // row blocks
          if (rows_left - t < k || cols_left - k < t) continue;
          for (const auto& col_sizes : partitions_into(rows_left - t, k)) {
            for (const auto& row_sizes : partitions_into(cols_left - k, t)) {
              std::vector<BlockSpec> blocks;
              if (hook) blocks.push_back(BlockSpec::hook(q, r));
              for (std::size_t m : col_sizes) blocks.push_back(BlockSpec::column(m));
              for (std::size_t s : row_sizes) blocks.push_back(BlockSpec::row(s));
              if (!blocks.empty()) lists.push_back(std::move(blocks));
            }
          }
        }
      }
    }
  }
  return lists;
}

std::string pattern_key(const MaxMatrix& m) {
  std::string key(m.data().size(), '0');
  for (std::size_t i = 0; i < m.data().size(); ++i) {
    if (m.data()[i] != 0.0) key[i] = '1';
  }
  return key;
}

MaxMatrix matrix_from_key(const std::string& key, std::size_t n) {
  MaxMatrix m(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (key[i * n + j] == '1') m.set(i, j, 1.0);
    }
  }
  return m;
}

// One peeled block together with the source rows/columns it occupies.
struct PlacedBlock {
  BlockSpec spec;
  std::vector<std::size_t> row_idx;
  std::vector<std::size_t> col_idx;
};

bool canonical_before(const PlacedBlock& a, const PlacedBlock& b) {
  auto rank = [](const BlockSpec& s) {
    switch (s.kind) {
      case BlockKind::Hook: return 0;
      case BlockKind::Column: return 1;
      case BlockKind::Row: return 2;
    }
    return 3;
  };
  if (rank(a.spec) != rank(b.spec)) return rank(a.spec) < rank(b.spec);
  const std::size_t size_a = a.spec.kind == BlockKind::Row ? a.spec.cols : a.spec.rows;
  const std::size_t size_b = b.spec.kind == BlockKind::Row ? b.spec.cols : b.spec.rows;
  return size_a > size_b;
}

}  // namespace

SingletonProfile singleton_profile(const MaxMatrix& e, const Tolerance& tol) {
  const auto bits = try_pattern(e, tol);
  if (!bits) {
    for (std::size_t i = 0; i < e.rows(); ++i) {
      for (std::size_t j = 0; j < e.cols(); ++j) {
        if (!tol.is_one(e(i, j)) && !tol.is_zero(e(i, j))) {
          throw validation_error("entry (" + std::to_string(i + 1) + ", " +
                                 std::to_string(j + 1) +
                                 ") is neither 0 nor 1 within tolerance");
        }
      }
    }
    throw validation_error("matrix is not a (0,1)-matrix within tolerance");
  }
  const PatternView view{&*bits, e.rows(), e.cols()};
  SingletonProfile profile;
  for (std::size_t i = 0; i < e.rows(); ++i) {
    for (std::size_t j = 0; j < e.cols(); ++j) {
      if (view.at(i, j)) profile[{i, j}] = classify_entry(view, i, j);
    }
  }
  return profile;
}

bool is_max_extreme(const MaxMatrix& e, const Tolerance& tol) {
  if (!e.is_square()) {
    throw dimension_error("max-extreme test requires a square matrix");
  }
  if (!classify(e, tol).doubly) return false;
  const auto bits = try_pattern(e, tol);
  if (!bits) return false;
  const PatternView view{&*bits, e.rows(), e.cols()};
  std::size_t non_singletons = 0;
  for (std::size_t i = 0; i < e.rows(); ++i) {
    for (std::size_t j = 0; j < e.cols(); ++j) {
      if (view.at(i, j) && classify_entry(view, i, j) == EntryClass::NonSingleton) {
        if (++non_singletons > 1) return false;
      }
    }
  }
  return true;
}

MaxMatrix realize(const std::vector<BlockSpec>& blocks) {
  check_blocks(blocks);
  MaxMatrix out;
  for (const BlockSpec& spec : blocks) out = direct_sum(out, realize_one(spec));
  return out;
}

std::vector<MaxMatrix> enumerate_extreme(std::size_t n, std::size_t bound) {
  if (n == 0) {
    throw validation_error("enumeration requires n >= 1");
  }
  if (n > bound) {
    throw capacity_error("enumeration bound exceeded (n <= " + std::to_string(bound) + ")");
  }

  std::vector<std::size_t> identity(n);
  for (std::size_t i = 0; i < n; ++i) identity[i] = i;

  std::unordered_set<std::string> seen;
  for (const auto& blocks : block_lists(n)) {
    const MaxMatrix base = realize(blocks);
    std::vector<std::size_t> sigma1 = identity;
    do {
      std::vector<std::size_t> sigma2_inv = identity;
      do {
        MaxMatrix image(n, n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            image.set(i, j, base(sigma1[i], sigma2_inv[j]));
          }
        }
        seen.insert(pattern_key(image));
      } while (std::next_permutation(sigma2_inv.begin(), sigma2_inv.end()));
    } while (std::next_permutation(sigma1.begin(), sigma1.end()));
  }

  std::vector<std::string> keys(seen.begin(), seen.end());
  std::sort(keys.begin(), keys.end());
  std::vector<MaxMatrix> out;
  out.reserve(keys.size());
  for (const auto& key : keys) out.push_back(matrix_from_key(key, n));
  return out;
}

ExtremeDecomposition decompose_extreme(const MaxMatrix& e, const Tolerance& tol) {
  if (!is_max_extreme(e, tol)) {
    throw validation_error("decomposition requires a max-extreme matrix");
  }
  const std::size_t n = e.rows();
  const auto bits = *try_pattern(e, tol);
  const PatternView view{&bits, n, n};

  std::vector<bool> row_active(n, true);
  std::vector<bool> col_active(n, true);
  std::vector<PlacedBlock> placed;

  // Hook extraction: the unique non-singleton entry becomes the hook corner;
  // the other ones in its row and column are the hook arms.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!view.at(i, j) || classify_entry(view, i, j) != EntryClass::NonSingleton) {
        continue;
      }
      std::vector<std::size_t> hook_rows{i};
      std::vector<std::size_t> hook_cols{j};
      for (std::size_t r = 0; r < n; ++r) {
        if (r != i && view.at(r, j)) hook_rows.push_back(r);
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j && view.at(i, c)) hook_cols.push_back(c);
      }
      for (std::size_t r : hook_rows) row_active[r] = false;
      for (std::size_t c : hook_cols) col_active[c] = false;
      placed.push_back({BlockSpec::hook(hook_rows.size(), hook_cols.size()),
                        std::move(hook_rows), std::move(hook_cols)});
      i = n;  // at most one non-singleton exists
      break;
    }
  }

  // Type-1 peel: the lowest-index unprocessed 1-entry anchors either a
  // column block (its column's ones, all row singletons) or a row block.
  while (true) {
    std::size_t pi = n, pj = n;
    for (std::size_t i = 0; i < n && pi == n; ++i) {
      if (!row_active[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (col_active[j] && view.at(i, j)) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == n) break;

    std::vector<std::size_t> col_ones;
    std::vector<std::size_t> row_ones;
    for (std::size_t r = 0; r < n; ++r) {
      if (row_active[r] && view.at(r, pj)) col_ones.push_back(r);
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (col_active[c] && view.at(pi, c)) row_ones.push_back(c);
    }

    if (row_ones.size() > 1) {
      for (std::size_t c : row_ones) col_active[c] = false;
      row_active[pi] = false;
      placed.push_back({BlockSpec::row(row_ones.size()), {pi}, std::move(row_ones)});
    } else {
      for (std::size_t r : col_ones) row_active[r] = false;
      col_active[pj] = false;
      placed.push_back({BlockSpec::column(col_ones.size()), std::move(col_ones), {pj}});
    }
  }

  std::stable_sort(placed.begin(), placed.end(), canonical_before);

  std::vector<std::size_t> row_of;
  std::vector<std::size_t> col_of;
  std::vector<BlockSpec> blocks;
  for (const PlacedBlock& block : placed) {
    blocks.push_back(block.spec);
    row_of.insert(row_of.end(), block.row_idx.begin(), block.row_idx.end());
    col_of.insert(col_of.end(), block.col_idx.begin(), block.col_idx.end());
  }

  return ExtremeDecomposition{Permutation(row_of).inverse(), std::move(blocks),
                              Permutation(col_of)};
}

std::optional<NonExtremalityWitness> non_extremality_witness(const MaxMatrix& e,
                                                             const Tolerance& tol) {
  if (!e.is_square() || !classify(e, tol).doubly) {
    throw validation_error("non-extremality witness requires a max-doubly stochastic matrix");
  }
  const std::size_t n = e.rows();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = e(i, j);
      if (tol.is_zero(v) || tol.is_one(v)) continue;
      MaxMatrix lowered = e;
      MaxMatrix raised = e;
      lowered.set(i, j, 0.0);
      raised.set(i, j, 1.0);
      return NonExtremalityWitness{std::move(lowered), std::move(raised), 1.0, v};
    }
  }

  const auto bits = *try_pattern(e, tol);
  const PatternView view{&bits, n, n};
  std::vector<std::pair<std::size_t, std::size_t>> non_singletons;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (view.at(i, j) && classify_entry(view, i, j) == EntryClass::NonSingleton) {
        non_singletons.emplace_back(i, j);
      }
    }
  }
  if (non_singletons.size() < 2) return std::nullopt;

  MaxMatrix d1 = e;
  MaxMatrix d2 = e;
  d1.set(non_singletons.front().first, non_singletons.front().second, 0.5);
  d2.set(non_singletons.back().first, non_singletons.back().second, 0.5);
  return NonExtremalityWitness{std::move(d1), std::move(d2), 1.0, 1.0};
}

}  // namespace maxalg
