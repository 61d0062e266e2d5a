#include "maxalg/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "maxalg/errors.hpp"

// Reference implementations, kept independent of the primary modules: no
// shared logic beyond the core containers, all comparisons spelled out.

namespace maxalg::oracle {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_square(const MaxMatrix& a) {
  if (!a.is_square()) {
    throw dimension_error("oracle requires a square matrix");
  }
}

void require_dim(std::size_t n, const OracleBudget& budget) {
  if (n > budget.max_dim) {
    throw capacity_error("oracle budget exceeded (max dimension " +
                         std::to_string(budget.max_dim) + ")");
  }
}

// Extends a simple path one edge at a time; only cycles whose smallest
// vertex is the start vertex are closed, so each cycle is seen once.
void extend_path(const MaxMatrix& a, std::size_t start, std::size_t current,
                 std::vector<bool>& on_path, std::size_t length, double log_product,
                 double& best_log_mean) {
  for (std::size_t next = start; next < a.rows(); ++next) {
    const double w = a(current, next);
    if (w <= 0.0) continue;
    const double extended = log_product + std::log(w);
    if (next == start) {
      best_log_mean =
          std::max(best_log_mean, extended / static_cast<double>(length + 1));
      continue;
    }
    if (on_path[next]) continue;
    on_path[next] = true;
    extend_path(a, start, next, on_path, length + 1, extended, best_log_mean);
    on_path[next] = false;
  }
}

bool pattern_is_mds(const std::vector<bool>& bits, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    bool row_has_one = false;
    bool col_has_one = false;
    for (std::size_t j = 0; j < n; ++j) {
      row_has_one = row_has_one || bits[i * n + j];
      col_has_one = col_has_one || bits[j * n + i];
    }
    if (!row_has_one || !col_has_one) return false;
  }
  return true;
}

}  // namespace

double brute_cycle_radius(const MaxMatrix& a, const OracleBudget& budget) {
  require_square(a);
  require_dim(a.rows(), budget);
  double best = kNegInf;
  std::vector<bool> on_path(a.rows(), false);
  for (std::size_t start = 0; start < a.rows(); ++start) {
    on_path[start] = true;
    extend_path(a, start, start, on_path, 0, 0.0, best);
    on_path[start] = false;
  }
  return best == kNegInf ? 0.0 : std::exp(best);
}

std::vector<MaxMatrix> brute_extreme_points(std::size_t n, const OracleBudget& budget) {
  if (n == 0) {
    throw validation_error("oracle enumeration requires n >= 1");
  }
  require_dim(n, budget);
  const std::size_t cells = n * n;
  if (cells >= 64 || (std::uint64_t{1} << cells) > budget.max_candidates) {
    throw capacity_error("oracle pattern space exceeds the candidate budget");
  }

  std::vector<MaxMatrix> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    std::vector<bool> bits(cells);
    for (std::size_t c = 0; c < cells; ++c) bits[c] = (mask >> c) & 1;
    if (!pattern_is_mds(bits, n)) continue;

    // Count the 1-entries that can be lowered below 1 with membership kept,
    // i.e. whose row and column both hold another 1.
    std::size_t lowerable = 0;
    for (std::size_t c = 0; c < cells && lowerable <= 1; ++c) {
      if (!bits[c]) continue;
      std::vector<bool> lowered = bits;
      lowered[c] = false;
      if (pattern_is_mds(lowered, n)) ++lowerable;
    }
    if (lowerable > 1) continue;

    MaxMatrix e(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (bits[i * n + j]) e.set(i, j, 1.0);
      }
    }
    out.push_back(std::move(e));
  }

  std::sort(out.begin(), out.end(), [](const MaxMatrix& a, const MaxMatrix& b) {
    return a.data() < b.data();  // row-major pattern order
  });
  return out;
}

namespace {

constexpr double kWitnessEps = 1e-9;

bool witness_eq(double a, double b) {
  return std::abs(a - b) <= kWitnessEps * std::max({1.0, a, b});
}

// Rows of D act independently in D (x) y = x, so candidate rows are
// enumerated per coordinate and the column condition is checked on the
// cross product. The entry candidate set {0, 1} U {x_i / y_j : x_i <= y_j}
// is exhaustive: in any solving D, an entry attaining the row maximum
// equals x_i / y_j for its column, a 1-entry can stay 1, and every other
// entry can drop to 0 without changing products or the lines holding a 1.
std::vector<std::vector<double>> candidate_rows(double x_i, const MaxVector& y) {
  const std::size_t n = y.dim();
  std::vector<double> values{0.0, 1.0};
  for (std::size_t j = 0; j < n; ++j) {
    if (y[j] > 0.0 && x_i <= y[j]) values.push_back(x_i / y[j]);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    double product = 0.0;
    double row_max = 0.0;
    std::vector<double> row(n);
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = values[pick[j]];
      product = std::max(product, row[j] * y[j]);
      row_max = std::max(row_max, row[j]);
    }
    if (witness_eq(product, x_i) && witness_eq(row_max, 1.0)) {
      rows.push_back(std::move(row));
    }

    std::size_t d = n;
    while (d > 0) {
      --d;
      if (++pick[d] < values.size()) break;
      pick[d] = 0;
      if (d == 0) return rows;
    }
  }
}

bool assemble(const std::vector<std::vector<std::vector<double>>>& row_choices,
              std::size_t next_row, std::vector<const std::vector<double>*>& chosen,
              MaxMatrix& found) {
  const std::size_t n = row_choices.size();
  if (next_row == n) {
    for (std::size_t j = 0; j < n; ++j) {
      double col_max = 0.0;
      for (std::size_t i = 0; i < n; ++i) col_max = std::max(col_max, (*chosen[i])[j]);
      if (!witness_eq(col_max, 1.0)) return false;
    }
    MaxMatrix d(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d.set(i, j, (*chosen[i])[j]);
    }
    found = std::move(d);
    return true;
  }
  for (const auto& row : row_choices[next_row]) {
    chosen[next_row] = &row;
    if (assemble(row_choices, next_row + 1, chosen, found)) return true;
  }
  return false;
}

}  // namespace

std::optional<MaxMatrix> brute_majorization_witness(const MaxVector& x, const MaxVector& y,
                                                    const OracleBudget& budget) {
  if (x.dim() != y.dim()) {
    throw dimension_error("vector dimensions must match");
  }
  const std::size_t n = x.dim();
  require_dim(n, budget);

  std::vector<std::vector<std::vector<double>>> row_choices;
  std::size_t combinations = 1;
  for (std::size_t i = 0; i < n; ++i) {
    row_choices.push_back(candidate_rows(x[i], y));
    if (row_choices.back().empty()) return std::nullopt;
    if (combinations > budget.max_candidates / row_choices.back().size()) {
      throw capacity_error("oracle witness search exceeds the candidate budget");
    }
    combinations *= row_choices.back().size();
  }

  std::vector<const std::vector<double>*> chosen(n, nullptr);
  MaxMatrix found;
  if (assemble(row_choices, 0, chosen, found)) return found;
  return std::nullopt;
}

double iterative_local_radius(const MaxMatrix& a, const MaxVector& x, std::size_t steps) {
  require_square(a);
  if (a.rows() != x.dim()) {
    throw dimension_error("matrix and vector dimensions must match");
  }
  if (x.is_zero()) {
    throw validation_error("iterative local radius requires a nonzero vector");
  }
  if (steps == 0) {
    throw validation_error("iterative local radius requires steps >= 1");
  }
  const std::size_t n = a.rows();

  std::vector<double> log_a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    log_a[i] = a.data()[i] > 0.0 ? std::log(a.data()[i]) : kNegInf;
  }
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = x[i] > 0.0 ? std::log(x[i]) : kNegInf;

  for (std::size_t k = 0; k < steps; ++k) {
    std::vector<double> next(n, kNegInf);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (log_a[i * n + j] != kNegInf && w[j] != kNegInf) {
          next[i] = std::max(next[i], log_a[i * n + j] + w[j]);
        }
      }
    }
    w = std::move(next);
    if (std::all_of(w.begin(), w.end(), [](double v) { return v == kNegInf; })) {
      return 0.0;
    }
  }
  const double top = *std::max_element(w.begin(), w.end());
  return std::exp(top / static_cast<double>(steps));
}

}  // namespace maxalg::oracle
