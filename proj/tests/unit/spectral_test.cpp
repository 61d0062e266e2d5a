#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "maxalg/oracles.hpp"
#include "maxalg/semiring.hpp"
#include "maxalg/spectral.hpp"
#include "maxalg/stochastic.hpp"
#include "test_rng.hpp"

using namespace maxalg;
using testsupport::random_matrix;
using testsupport::random_permutation;
using testsupport::random_vector;

TEST_SUITE_BEGIN("spectral");

TEST_CASE("spectral radius on reference matrices") {
  CHECK(spectral_radius(MaxMatrix::identity(3)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(spectral_radius(testsupport::d1()) == doctest::Approx(1.0).epsilon(1e-9));

  // Single 2-cycle with weights 2 and 3: geometric mean sqrt(6).
  const MaxMatrix two_cycle{{0, 2}, {3, 0}};
  const double expected = oracle::brute_cycle_radius(two_cycle);
  CHECK(expected == doctest::Approx(std::sqrt(6.0)).epsilon(1e-14));
  CHECK(spectral_radius(two_cycle) == doctest::Approx(expected).epsilon(1e-14));

  CHECK(spectral_radius(MaxMatrix{{0, 1}, {0, 0}}) == 0.0);  // acyclic
  CHECK_THROWS_AS(spectral_radius(MaxMatrix{{1, 2}}), dimension_error);
}

TEST_CASE("norm is the largest entry") {
  CHECK(norm(MaxMatrix(2, 2, 0.0)) == 0.0);
  CHECK(norm(testsupport::d1()) == 1.0);
  CHECK(norm(MaxMatrix{{0, 2}, {3, 0}}) == 3.0);
}

TEST_CASE("eigenpair verification") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + testsupport::uniform_index(rng, 6);
    const MaxMatrix d = random_mds(n, rng(), 0.5);
    CHECK(is_eigenpair(d, ones(n), 1.0));

    // Row-stochastic is already enough for the unit eigenvector.
    MaxMatrix row_stochastic = random_matrix(rng, n, n, 0.2, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double m = row_stochastic.row_max(i);
      if (m == 0.0) {
        row_stochastic.set(i, i, 1.0);
      } else {
        for (std::size_t j = 0; j < n; ++j) {
          row_stochastic.set(i, j, row_stochastic(i, j) / m);
        }
      }
    }
    CHECK(is_eigenpair(row_stochastic, ones(n), 1.0));
  }

  const MaxVector x{0.3, 1.7};
  CHECK(is_eigenpair(MaxMatrix::identity(2), x, 1.0));

  const MaxMatrix a{{0, 2}, {3, 0}};
  CHECK(is_eigenpair(a, MaxVector{std::sqrt(2.0 / 3.0), 1.0}, std::sqrt(6.0)));

  CHECK_THROWS_AS(is_eigenpair(a, MaxVector{0, 0}, 1.0), validation_error);
}

TEST_CASE("eigenvalues cannot exceed the spectral radius") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + testsupport::uniform_index(rng, 5);
    const MaxMatrix a = random_matrix(rng, n, n, 0.4);
    const MaxVector x = random_vector(rng, n, 2.0);
    if (x.is_zero()) continue;
    const double lambda = spectral_radius(a) * 1.5 + 0.1;
    CHECK_FALSE(is_eigenpair(a, x, lambda));
  }
}

TEST_CASE("local spectral radius closed form") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + testsupport::uniform_index(rng, 6);
    const MaxMatrix a = random_matrix(rng, n, n, 0.5);
    CHECK(local_spectral_radius(a, ones(n)) ==
          doctest::Approx(spectral_radius(a)).epsilon(1e-12));
  }

  const MaxMatrix nilpotent{{0, 1}, {0, 0}};
  CHECK(local_spectral_radius(nilpotent, unit_vector(2, 0)) == 0.0);
  CHECK(local_spectral_radius(nilpotent, unit_vector(2, 1)) == 0.0);

  // Loop of weight 3 at node 1 feeds node 1 only; node 2 sees its own loop.
  const MaxMatrix a{{3, 0}, {1, 2}};
  CHECK(local_spectral_radius(a, unit_vector(2, 0)) == doctest::Approx(3.0));
  CHECK(local_spectral_radius(a, unit_vector(2, 1)) == doctest::Approx(2.0));
  CHECK(oracle::iterative_local_radius(a, unit_vector(2, 0), 300) ==
        doctest::Approx(3.0).epsilon(0.05));
  CHECK(oracle::iterative_local_radius(a, unit_vector(2, 1), 300) ==
        doctest::Approx(2.0).epsilon(0.05));

  // Edge direction: a(u,v) > 0 means u -> v, so the loop at node 2 feeds
  // e_2 but never e_1.
  const MaxMatrix directed{{0, 1}, {0, 2}};
  CHECK(local_spectral_radius(directed, unit_vector(2, 0)) == 0.0);
  CHECK(local_spectral_radius(directed, unit_vector(2, 1)) == doctest::Approx(2.0));
  CHECK(oracle::iterative_local_radius(directed, unit_vector(2, 0), 50) == 0.0);

  CHECK_THROWS_AS(local_spectral_radius(a, MaxVector{0, 0}), validation_error);
}

TEST_CASE("irreducibility is strong connectivity") {
  std::vector<std::size_t> cycle{1, 2, 0};
  CHECK(is_irreducible(permutation_matrix(Permutation(cycle))));
  CHECK_FALSE(is_irreducible(MaxMatrix{{0, 1, 1}, {0, 0, 1}, {0, 0, 0}}));
  CHECK_FALSE(is_irreducible(testsupport::d2()));  // no path back from node 3
  CHECK(is_irreducible(MaxMatrix{{0.5}}));
  CHECK(is_irreducible(MaxMatrix{{0}}));
  CHECK_THROWS_AS(is_irreducible(MaxMatrix{{1, 2}}), dimension_error);
}

TEST_CASE("radius is invariant under transpose, scaling and conjugation") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + testsupport::uniform_index(rng, 6);
    const MaxMatrix a = random_matrix(rng, n, n, 0.4);
    const double r = spectral_radius(a);

    CHECK(spectral_radius(transpose(a)) == doctest::Approx(r).epsilon(1e-12));

    const double alpha = testsupport::uniform(rng, 0.1, 3.0);
    CHECK(spectral_radius(scale(alpha, a)) == doctest::Approx(alpha * r).epsilon(1e-12));

    const MaxMatrix p = permutation_matrix(random_permutation(rng, n));
    CHECK(spectral_radius(otimes(otimes(p, a), transpose(p))) ==
          doctest::Approx(r).epsilon(1e-12));

    const MaxMatrix b = oplus(a, random_matrix(rng, n, n, 0.6));
    CHECK(spectral_radius(a) <= spectral_radius(b) + 1e-12);
  }
}

TEST_CASE("radius agrees with the simple-cycle oracle") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + testsupport::uniform_index(rng, 6);
    const MaxMatrix a = random_matrix(rng, n, n, 0.5);
    const double fast = spectral_radius(a);
    const double brute = oracle::brute_cycle_radius(a);
    CHECK(fast == doctest::Approx(brute).epsilon(1e-12));
  }
}

TEST_CASE("irreducible matrices admit no eigenvalue besides the radius") {
  std::mt19937_64 rng(36);
  const Tolerance tol;
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 100; ++trial) {
    const std::size_t n = 2 + testsupport::uniform_index(rng, 4);
    const MaxMatrix a = random_matrix(rng, n, n, 0.5);
    if (!is_irreducible(a)) continue;
    ++checked;
    const double r = spectral_radius(a);
    for (int probe = 0; probe < 10; ++probe) {
      const MaxVector x = random_vector(rng, n, 2.0);
      if (x.is_zero()) continue;
      const double lambda = testsupport::uniform(rng, 0.0, 2.0 * r + 0.5);
      if (is_eigenpair(a, x, lambda, tol)) {
        CHECK(tol.eq(lambda, r));
      }
    }
  }
  CHECK(checked == 100);
}

TEST_CASE("spectral report ties the pieces together") {
  const SpectralReport report = spectral_report(testsupport::d1());
  CHECK(report.radius == doctest::Approx(1.0));
  CHECK(report.norm == 1.0);
  CHECK(report.irreducible);
  double best = 0.0;
  for (double r : report.local_radii) best = std::max(best, r);
  CHECK(best == doctest::Approx(report.radius).epsilon(1e-12));
}

TEST_SUITE_END();
