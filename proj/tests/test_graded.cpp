#include "doctest.h"

#include "frs/foset.hpp"
#include "frs/graded_space.hpp"
#include "oracles.hpp"

#include <algorithm>

using namespace frs;

TEST_CASE("order grade of the componentwise model") {
  const GradedSpace sp(2, Rational(2, 3));
  const Vec x{Rational(0), Rational(0)};
  const Vec y{Rational(1), Rational(1)};
  CHECK(order_grade(sp, x, x) == 1);
  CHECK(order_grade(sp, x, y) == Rational(2, 3));
  CHECK(order_grade(sp, Vec{Rational(1), Rational(0)}, Vec{Rational(0), Rational(1)}) == 0);
  CHECK_THROWS_AS(order_grade(sp, x, Vec{Rational(1)}), InputError);
}

TEST_CASE("alpha must exceed one half") {
  CHECK_THROWS_AS(GradedSpace(2, Rational(1, 2)), InputError);
  CHECK_THROWS_AS(GradedSpace(2, Rational(6, 5)), InputError);
  CHECK_NOTHROW(GradedSpace(2, Rational(1)));
  CHECK_NOTHROW(GradedSpace(2, Rational(51, 100)));
}

TEST_CASE("componentwise lattice operations") {
  const GradedSpace sp = GradedSpace::with_default_grade(2);
  const LatticeOps ops = lattice_ops(sp, Vec{Rational(1), Rational(-2)}, Vec::zero(2));
  CHECK(ops.pos == Vec{Rational(1), Rational(0)});
  CHECK(ops.neg == Vec{Rational(0), Rational(2)});
  CHECK(ops.abs == Vec{Rational(1), Rational(2)});

  const LatticeOps pair = lattice_ops(sp, Vec::unit(2, 0), Vec::unit(2, 1));
  CHECK(pair.join == Vec{Rational(1), Rational(1)});
  CHECK(pair.meet == Vec::zero(2));
}

TEST_CASE("lattice identities hold exactly on random vectors") {
  Rng rng(31337);
  for (int t = 0; t < 2000; ++t) {
    const GradedSpace sp = GradedSpace::with_default_grade(static_cast<int>(rng.next_int(1, 8)));
    const Vec x = random_vec(rng, sp.dim);
    const Vec y = random_vec(rng, sp.dim);
    const LatticeOps ops = lattice_ops(sp, x, y);
    REQUIRE(x == ops.pos - ops.neg);
    REQUIRE(ops.abs == ops.pos + ops.neg);
    REQUIRE(cwise_min(ops.pos, ops.neg).is_zero());
    REQUIRE(x + y == ops.join + ops.meet);
    REQUIRE(order_grade(sp, abs_vec(x + y), abs_vec(x) + abs_vec(y)) > half());
  }
}

TEST_CASE("model-level antisymmetry") {
  Rng rng(99);
  const GradedSpace sp = GradedSpace::with_default_grade(4);
  for (int t = 0; t < 500; ++t) {
    const Vec x = random_vec(rng, 4);
    const Vec y = random_vec(rng, 4);
    if (order_grade(sp, x, y) > half() && order_grade(sp, y, x) > half()) {
      CHECK(x == y);
    }
  }
}

TEST_CASE("join and meet satisfy the foset sup conditions on the induced sub-foset") {
  Rng rng(555);
  for (int t = 0; t < 200; ++t) {
    const GradedSpace sp = GradedSpace::with_default_grade(static_cast<int>(rng.next_int(1, 6)));
    const Vec x = random_vec(rng, sp.dim);
    const Vec y = random_vec(rng, sp.dim);
    const LatticeOps ops = lattice_ops(sp, x, y);

    std::vector<Vec> carrier = {x, y, ops.join, ops.meet};
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
    // Dedup without ordering assumptions.
    std::vector<Vec> unique_carrier;
    for (const Vec& v : carrier) {
      if (std::find(unique_carrier.begin(), unique_carrier.end(), v) == unique_carrier.end()) {
        unique_carrier.push_back(v);
      }
    }
    FuzzyOrderMatrix m(static_cast<int>(unique_carrier.size()));
    for (int i = 0; i < m.size; ++i) {
      for (int j = 0; j < m.size; ++j) {
        m.at(i, j) = order_grade(sp, unique_carrier[static_cast<std::size_t>(i)],
                                 unique_carrier[static_cast<std::size_t>(j)]);
      }
    }
    REQUIRE(validate_fuzzy_order(m).valid());

    const auto index_of = [&](const Vec& v) {
      return static_cast<int>(std::find(unique_carrier.begin(), unique_carrier.end(), v) -
                              unique_carrier.begin());
    };
    const std::vector<int> pair = {index_of(x), index_of(y)};
    CHECK(sup_inf(m, pair, ExtremumMode::Sup) == index_of(ops.join));
    CHECK(sup_inf(m, pair, ExtremumMode::Inf) == index_of(ops.meet));
  }
}

TEST_CASE("translation and scaling compatibility holds for the graded order") {
  const GradedSpace sp = GradedSpace::with_default_grade(4);
  const CompatibilityReport report = check_compatibility(sp, 1000, 42);
  CHECK(report.ok());
  CHECK(report.trials == 1000);
}

TEST_CASE("a corrupted grade function is reported") {
  const GradedSpace sp = GradedSpace::with_default_grade(3);
  // Translation-variant corruption: comparability only below a threshold
  // point, so shifting can destroy the grade.
  const GradeFn corrupted = [&sp](const Vec& a, const Vec& b) {
    if (a == b) return Rational(1);
    if (cwise_leq(a, b) && cwise_leq(b, Vec{Rational(50), Rational(50), Rational(50)})) {
      return sp.alpha;
    }
    return Rational(0);
  };
  const CompatibilityReport report = check_compatibility(sp, 2000, 7, corrupted);
  CHECK_FALSE(report.ok());
}

TEST_CASE("the graded spaces are Archimedean") {
  CHECK(check_archimedean(GradedSpace::with_default_grade(1)));
  CHECK(check_archimedean(GradedSpace(8, Rational(3, 4))));
  CHECK(check_archimedean(GradedSpace(5, Rational(51, 100))));
}
