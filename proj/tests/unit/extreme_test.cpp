#include <random>
#include <set>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "maxalg/extreme.hpp"
#include "maxalg/oracles.hpp"
#include "maxalg/semiring.hpp"
#include "maxalg/stochastic.hpp"
#include "test_rng.hpp"

using namespace maxalg;
using testsupport::random_permutation;

namespace {

std::vector<MaxMatrix> p1_set() {
  return {MaxMatrix::identity(3),
          MaxMatrix{{1, 1, 0}, {1, 0, 0}, {0, 0, 1}},
          MaxMatrix{{0, 1, 1}, {1, 0, 0}, {1, 0, 0}},
          MaxMatrix{{1, 1, 1}, {1, 0, 0}, {1, 0, 0}}};
}

bool contains(const std::vector<MaxMatrix>& haystack, const MaxMatrix& needle) {
  for (const auto& m : haystack) {
    if (m == needle) return true;
  }
  return false;
}

MaxMatrix reconstruct(const ExtremeDecomposition& dec) {
  return otimes(otimes(permutation_matrix(dec.p_left), realize(dec.blocks)),
                permutation_matrix(dec.p_right));
}

MaxMatrix from_mask(std::uint64_t mask, std::size_t n) {
  MaxMatrix m(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((mask >> (i * n + j)) & 1) m.set(i, j, 1.0);
    }
  }
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("extreme");

TEST_CASE("singleton profile classifies 1-entries") {
  const auto id_profile = singleton_profile(MaxMatrix::identity(3));
  CHECK(id_profile.size() == 3);
  for (const auto& [pos, cls] : id_profile) CHECK(cls == EntryClass::BothSingleton);

  const auto hook_profile = singleton_profile(MaxMatrix{{1, 1}, {1, 0}});
  CHECK(hook_profile.at({0, 0}) == EntryClass::NonSingleton);
  CHECK(hook_profile.at({0, 1}) == EntryClass::ColumnSingleton);
  CHECK(hook_profile.at({1, 0}) == EntryClass::RowSingleton);

  const auto full = singleton_profile(MaxMatrix{{1, 1}, {1, 1}});
  CHECK(full.size() == 4);
  for (const auto& [pos, cls] : full) CHECK(cls == EntryClass::NonSingleton);

  // Rectangular patterns classify too.
  const auto wide = singleton_profile(MaxMatrix{{1, 1, 1}, {1, 0, 0}});
  CHECK(wide.at({0, 0}) == EntryClass::NonSingleton);
  CHECK(wide.at({0, 1}) == EntryClass::ColumnSingleton);
  CHECK(wide.at({1, 0}) == EntryClass::RowSingleton);

  CHECK_THROWS_WITH_AS(singleton_profile(MaxMatrix{{1, 0.4}, {0, 1}}),
                       doctest::Contains("(1, 2)"), validation_error);
}

TEST_CASE("max-extreme membership") {
  for (const auto& e : p1_set()) CHECK(is_max_extreme(e));
  CHECK(is_max_extreme(MaxMatrix{{1, 1}, {1, 0}}));
  CHECK_FALSE(is_max_extreme(MaxMatrix{{1, 1}, {1, 1}}));
  CHECK_FALSE(is_max_extreme(testsupport::d1()));  // fractional entries
  CHECK_FALSE(is_max_extreme(MaxMatrix{{1, 0}, {1, 0}}));  // not MDS
  CHECK_THROWS_AS(is_max_extreme(MaxMatrix{{1, 0}}), dimension_error);
}

TEST_CASE("realize builds the canonical forms") {
  CHECK(realize({BlockSpec::column(1)}) == MaxMatrix::identity(1));
  CHECK(realize({BlockSpec::hook(2, 2)}) == MaxMatrix{{1, 1}, {1, 0}});
  CHECK(realize({BlockSpec::column(2), BlockSpec::row(2)}) ==
        MaxMatrix{{1, 0, 0}, {1, 0, 0}, {0, 1, 1}});

  CHECK_THROWS_AS(realize({}), validation_error);
  CHECK_THROWS_AS(realize({BlockSpec::hook(1, 2)}), validation_error);
  CHECK_THROWS_AS(realize({BlockSpec::column(1), BlockSpec::hook(2, 2)}), validation_error);
  CHECK_THROWS_AS(realize({BlockSpec::hook(2, 2), BlockSpec::hook(2, 2)}), validation_error);
}

TEST_CASE("every realized block list is row and column stochastic") {
  std::mt19937_64 rng(51);
  const Tolerance tol;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<BlockSpec> blocks;
    if (testsupport::uniform01(rng) < 0.4) {
      blocks.push_back(BlockSpec::hook(2 + testsupport::uniform_index(rng, 3),
                                       2 + testsupport::uniform_index(rng, 3)));
    }
    const std::size_t extra = testsupport::uniform_index(rng, 4) + (blocks.empty() ? 1 : 0);
    std::vector<BlockSpec> tail;
    for (std::size_t b = 0; b < extra; ++b) {
      const std::size_t size = 1 + testsupport::uniform_index(rng, 4);
      tail.push_back(testsupport::uniform01(rng) < 0.5 ? BlockSpec::column(size)
                                                       : BlockSpec::row(size));
    }
    blocks.insert(blocks.end(), tail.begin(), tail.end());
    const MaxMatrix e = realize(blocks);
    for (std::size_t i = 0; i < e.rows(); ++i) CHECK(tol.is_one(e.row_max(i)));
    for (std::size_t j = 0; j < e.cols(); ++j) CHECK(tol.is_one(e.col_max(j)));
  }
}

TEST_CASE("enumeration matches the exhaustive oracle") {
  const auto one = enumerate_extreme(1);
  REQUIRE(one.size() == 1);
  CHECK(one.front() == MaxMatrix::identity(1));

  const auto two = enumerate_extreme(2);
  CHECK(two.size() == 6);
  CHECK(two == oracle::brute_extreme_points(2));

  const auto three = enumerate_extreme(3);
  CHECK(three == oracle::brute_extreme_points(3));
  for (const auto& e : p1_set()) CHECK(contains(three, e));

  CHECK_THROWS_AS(enumerate_extreme(6), capacity_error);
  CHECK_THROWS_AS(enumerate_extreme(0), validation_error);
}

TEST_CASE("decomposition of the named examples") {
  const auto id3 = decompose_extreme(MaxMatrix::identity(3));
  CHECK(id3.blocks == std::vector<BlockSpec>{BlockSpec::column(1), BlockSpec::column(1),
                                             BlockSpec::column(1)});
  CHECK(id3.p_left == Permutation::identity(3));
  CHECK(id3.p_right == Permutation::identity(3));

  const MaxMatrix mixed{{0, 1, 1}, {1, 0, 0}, {1, 0, 0}};
  const auto dec = decompose_extreme(mixed);
  CHECK(dec.blocks == std::vector<BlockSpec>{BlockSpec::column(2), BlockSpec::row(2)});
  CHECK(reconstruct(dec) == mixed);

  const MaxMatrix hook3{{1, 1, 1}, {1, 0, 0}, {1, 0, 0}};
  const auto hook_dec = decompose_extreme(hook3);
  CHECK(hook_dec.blocks == std::vector<BlockSpec>{BlockSpec::hook(3, 3)});
  CHECK(hook_dec.p_left == Permutation::identity(3));
  CHECK(hook_dec.p_right == Permutation::identity(3));

  CHECK_THROWS_AS(decompose_extreme(MaxMatrix{{1, 1}, {1, 1}}), validation_error);
}

TEST_CASE("decomposition round-trips every enumerated point") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& e : enumerate_extreme(n)) {
      const auto dec = decompose_extreme(e);
      CHECK(reconstruct(dec) == e);

      std::size_t non_singletons = 0;
      for (const auto& [pos, cls] : singleton_profile(e)) {
        if (cls == EntryClass::NonSingleton) ++non_singletons;
      }
      std::size_t hooks = 0;
      for (const auto& b : dec.blocks) {
        if (b.kind == BlockKind::Hook) ++hooks;
      }
      CHECK(hooks == non_singletons);
      if (hooks == 1) CHECK(dec.blocks.front().kind == BlockKind::Hook);

      // Canonical order: hook, then columns by size, then rows by size.
      std::size_t total_rows = 0;
      std::size_t total_cols = 0;
      int last_rank = -1;
      std::size_t last_size = 0;
      for (const auto& b : dec.blocks) {
        total_rows += b.rows;
        total_cols += b.cols;
        const int rank = b.kind == BlockKind::Hook ? 0
                         : b.kind == BlockKind::Column ? 1
                                                       : 2;
        const std::size_t size = b.kind == BlockKind::Row ? b.cols : b.rows;
        CHECK(rank >= last_rank);
        if (rank == last_rank) CHECK(size <= last_size);
        last_rank = rank;
        last_size = size;
      }
      CHECK(total_rows == n);
      CHECK(total_cols == n);
    }
  }
}

TEST_CASE("extremality is preserved under permutation conjugation") {
  // Exhaustive over all permutation pairs for n <= 3.
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto points = enumerate_extreme(n);
    std::vector<std::size_t> s1(n);
    for (std::size_t i = 0; i < n; ++i) s1[i] = i;
    do {
      std::vector<std::size_t> s2(n);
      for (std::size_t i = 0; i < n; ++i) s2[i] = i;
      do {
        const MaxMatrix p1 = permutation_matrix(Permutation(s1));
        const MaxMatrix p2 = permutation_matrix(Permutation(s2));
        for (const auto& e : points) {
          CHECK(is_max_extreme(otimes(otimes(p1, e), p2)));
        }
      } while (std::next_permutation(s2.begin(), s2.end()));
    } while (std::next_permutation(s1.begin(), s1.end()));
  }

  std::mt19937_64 rng(52);
  const auto points = enumerate_extreme(4);
  for (int trial = 0; trial < 40; ++trial) {
    const MaxMatrix& e = points[testsupport::uniform_index(rng, points.size())];
    const MaxMatrix p1 = permutation_matrix(random_permutation(rng, 4));
    const MaxMatrix p2 = permutation_matrix(random_permutation(rng, 4));
    CHECK(is_max_extreme(otimes(otimes(p1, e), p2)));
  }
}

TEST_CASE("non-extremality witnesses") {
  // Fractional entry: lemma pair (entry -> 0, entry -> 1), coefficient = entry.
  const MaxMatrix fractional{{0.7, 1}, {1, 0}};
  const auto w = non_extremality_witness(fractional);
  REQUIRE(w.has_value());
  CHECK(w->d1 == MaxMatrix{{0, 1}, {1, 0}});
  CHECK(w->d2 == MaxMatrix{{1, 1}, {1, 0}});
  CHECK(w->alpha1 == Scalar(1.0));
  CHECK(w->alpha2 == Scalar(0.7));
  CHECK(max_convex_combination<MaxMatrix>({{w->alpha1, w->d1}, {w->alpha2, w->d2}}) ==
        fractional);

  // Two non-singletons: each copy lowers one of them to 0.5.
  const MaxMatrix flat{{1, 1}, {1, 1}};
  const auto w2 = non_extremality_witness(flat);
  REQUIRE(w2.has_value());
  CHECK(w2->d1 == MaxMatrix{{0.5, 1}, {1, 1}});
  CHECK(w2->d2 == MaxMatrix{{1, 1}, {1, 0.5}});
  CHECK(oplus(w2->d1, w2->d2) == flat);
  CHECK(classify(w2->d1).doubly);
  CHECK(classify(w2->d2).doubly);
  CHECK(w2->d1 != flat);
  CHECK(w2->d2 != flat);

  CHECK_FALSE(non_extremality_witness(MaxMatrix{{1, 1}, {1, 0}}).has_value());
  CHECK_THROWS_AS(non_extremality_witness(MaxMatrix{{1, 0}, {1, 0}}), validation_error);
}

TEST_CASE("witness absence characterizes the enumerated sets") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto points = enumerate_extreme(n);
    for (const auto& e : points) CHECK_FALSE(non_extremality_witness(e).has_value());

    std::set<std::string> member_keys;
    for (const auto& e : points) {
      std::string key;
      for (double v : e.data()) key.push_back(v == 0.0 ? '0' : '1');
      member_keys.insert(std::move(key));
    }

    // Every MDS (0,1)-matrix outside the set has a reconstructing witness.
    const std::uint64_t patterns = std::uint64_t{1} << (n * n);
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
      const MaxMatrix d = from_mask(mask, n);
      if (!classify(d).doubly) continue;
      std::string key;
      for (double v : d.data()) key.push_back(v == 0.0 ? '0' : '1');
      if (member_keys.count(key) != 0) continue;

      const auto witness = non_extremality_witness(d);
      REQUIRE(witness.has_value());
      REQUIRE(classify(witness->d1).doubly);
      REQUIRE(classify(witness->d2).doubly);
      REQUIRE(witness->d1 != d);
      REQUIRE(witness->d2 != d);
      REQUIRE(max_convex_combination<MaxMatrix>(
                  {{witness->alpha1, witness->d1}, {witness->alpha2, witness->d2}}) == d);
    }
  }
}

TEST_SUITE_END();
