#include "maxalg/semiring.hpp"

#include <algorithm>

namespace maxalg {

namespace {

void require_same_dim(const MaxVector& a, const MaxVector& b) {
  if (a.dim() != b.dim()) {
    throw dimension_error("vector dimensions must match");
  }
}

void require_same_shape(const MaxMatrix& a, const MaxMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw dimension_error("matrix shapes must match");
  }
}

}  // namespace

MaxVector oplus(const MaxVector& a, const MaxVector& b) {
  require_same_dim(a, b);
  MaxVector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out.set(i, std::max(a[i], b[i]));
  return out;
}

MaxMatrix oplus(const MaxMatrix& a, const MaxMatrix& b) {
  require_same_shape(a, b);
  MaxMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out.set(i, j, std::max(a(i, j), b(i, j)));
    }
  }
  return out;
}

MaxMatrix otimes(const MaxMatrix& a, const MaxMatrix& b) {
  if (a.cols() != b.rows()) {
    throw dimension_error("matrix product inner dimensions must match");
  }
  MaxMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      double best = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        best = std::max(best, a(i, k) * b(k, j));
      }
      out.set(i, j, best);
    }
  }
  return out;
}

MaxVector otimes(const MaxMatrix& a, const MaxVector& x) {
  if (a.cols() != x.dim() || a.rows() == 0) {
    throw dimension_error("matrix-vector product dimensions must match");
  }
  MaxVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double best = 0.0;
    for (std::size_t k = 0; k < a.cols(); ++k) {
      best = std::max(best, a(i, k) * x[k]);
    }
    out.set(i, best);
  }
  return out;
}

MaxVector scale(Scalar alpha, const MaxVector& v) {
  MaxVector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out.set(i, alpha.value() * v[i]);
  return out;
}

MaxMatrix scale(Scalar alpha, const MaxMatrix& a) {
  MaxMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out.set(i, j, alpha.value() * a(i, j));
    }
  }
  return out;
}

bool le(const MaxVector& a, const MaxVector& b, const Tolerance& tol) {
  require_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!tol.le(a[i], b[i])) return false;
  }
  return true;
}

bool le(const MaxMatrix& a, const MaxMatrix& b, const Tolerance& tol) {
  require_same_shape(a, b);
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    if (!tol.le(a.data()[i], b.data()[i])) return false;
  }
  return true;
}

StandardVectors standard_vectors(std::size_t n) {
  if (n == 0) {
    throw validation_error("standard vectors require n >= 1");
  }
  StandardVectors out{MaxVector(n, 1.0), MaxVector(n, 0.0), {}};
  out.units.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.units.push_back(unit_vector(n, i));
  return out;
}

MaxVector ones(std::size_t n) { return MaxVector(n, 1.0); }

MaxVector unit_vector(std::size_t n, std::size_t i) {
  MaxVector e(n, 0.0);
  e.set(i, 1.0);
  return e;
}

MaxMatrix direct_sum(const MaxMatrix& a, const MaxMatrix& b) {
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  MaxMatrix out(a.rows() + b.rows(), a.cols() + b.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j));
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      out.set(a.rows() + i, a.cols() + j, b(i, j));
    }
  }
  return out;
}

MaxMatrix transpose(const MaxMatrix& a) {
  if (a.is_empty()) return a;
  MaxMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(j, i, a(i, j));
  }
  return out;
}

MaxVector concat(const MaxVector& a, const MaxVector& b) {
  MaxVector out(a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out.set(i, a[i]);
  for (std::size_t i = 0; i < b.dim(); ++i) out.set(a.dim() + i, b[i]);
  return out;
}

namespace detail {

void check_convex_coefficients(const std::vector<double>& alphas, const Tolerance& tol) {
  double sum = 0.0;
  for (double alpha : alphas) sum = std::max(sum, alpha);
  if (!tol.is_one(sum)) {
    throw validation_error("max-convex coefficients must satisfy (+)_i alpha_i = 1");
  }
}

}  // namespace detail

}  // namespace maxalg
