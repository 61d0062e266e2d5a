#include <cmath>
#include <random>

#include "doctest.h"
#include "maxalg/majorization.hpp"
#include "maxalg/oracles.hpp"
#include "maxalg/semiring.hpp"
#include "maxalg/spectral.hpp"
#include "maxalg/stochastic.hpp"
#include "test_rng.hpp"

using namespace maxalg;
using testsupport::random_matrix;

TEST_SUITE_BEGIN("oracles");

TEST_CASE("brute cycle radius") {
  CHECK(oracle::brute_cycle_radius(MaxMatrix::identity(4)) == doctest::Approx(1.0));
  CHECK(oracle::brute_cycle_radius(MaxMatrix{{0, 2}, {3, 0}}) ==
        doctest::Approx(std::sqrt(6.0)).epsilon(1e-14));
  CHECK(oracle::brute_cycle_radius(MaxMatrix{{0, 1, 2}, {0, 0, 3}, {0, 0, 0}}) == 0.0);
  CHECK_THROWS_AS(oracle::brute_cycle_radius(MaxMatrix(7, 7, 1.0)), capacity_error);
}

TEST_CASE("brute extreme points") {
  const auto one = oracle::brute_extreme_points(1);
  REQUIRE(one.size() == 1);
  CHECK(one.front() == MaxMatrix::identity(1));
  CHECK(oracle::brute_extreme_points(2).size() == 6);
  CHECK_THROWS_AS(oracle::brute_extreme_points(5), capacity_error);
}

TEST_CASE("brute majorization witness") {
  const auto found = oracle::brute_majorization_witness(MaxVector{2, 2}, MaxVector{2, 1});
  REQUIRE(found.has_value());
  CHECK(classify(*found).doubly);
  CHECK(approx_equal(otimes(*found, MaxVector{2, 1}), MaxVector{2, 2}, Tolerance{}));

  CHECK_FALSE(
      oracle::brute_majorization_witness(MaxVector{2, 0.5}, MaxVector{2, 1}).has_value());

  const MaxVector same{1.5, 0.25, 0.75};
  CHECK(oracle::brute_majorization_witness(same, same).has_value());

  CHECK_THROWS_AS(oracle::brute_majorization_witness(MaxVector(4, 1.0), MaxVector(4, 1.0)),
                  capacity_error);
}

TEST_CASE("witness presence matches the majorization predicate on a grid") {
  const std::vector<double> values{0.0, 0.5, 1.0, 2.0};
  for (std::size_t a = 0; a < values.size(); ++a) {
    for (std::size_t b = 0; b < values.size(); ++b) {
      for (std::size_t c = 0; c < values.size(); ++c) {
        for (std::size_t d = 0; d < values.size(); ++d) {
          const MaxVector x{values[a], values[b]};
          const MaxVector y{values[c], values[d]};
          CHECK(oracle::brute_majorization_witness(x, y).has_value() ==
                majorizes_check(x, y));
        }
      }
    }
  }
}

TEST_CASE("iterative local radius estimates") {
  CHECK(oracle::iterative_local_radius(MaxMatrix::identity(3), ones(3), 10) ==
        doctest::Approx(1.0));
  CHECK(oracle::iterative_local_radius(MaxMatrix{{0, 1}, {0, 0}}, unit_vector(2, 0), 50) ==
        0.0);
  CHECK(oracle::iterative_local_radius(MaxMatrix{{3, 0}, {1, 2}}, unit_vector(2, 1), 300) ==
        doctest::Approx(2.0).epsilon(0.05));
  CHECK_THROWS_AS(oracle::iterative_local_radius(MaxMatrix::identity(2), MaxVector{0, 0}, 10),
                  validation_error);
}

TEST_CASE("iterative estimate converges to the closed form") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + testsupport::uniform_index(rng, 6);
    const MaxMatrix a = random_matrix(rng, n, n, 0.5);
    const std::size_t i = testsupport::uniform_index(rng, n);
    const double closed = local_spectral_radius(a, unit_vector(n, i));
    const double estimate = oracle::iterative_local_radius(a, unit_vector(n, i), 300);
    if (closed > 0.0) {
      CHECK(std::abs(estimate - closed) / closed <= 0.05);
    } else {
      CHECK(estimate == 0.0);
    }
  }
}

TEST_SUITE_END();
