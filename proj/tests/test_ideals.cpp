#include "doctest.h"

#include "frs/ideals.hpp"
#include "frs/linalg.hpp"
#include "oracles.hpp"

using namespace frs;

namespace {
const GradedSpace dim2 = GradedSpace::with_default_grade(2);
const GradedSpace dim3 = GradedSpace::with_default_grade(3);
}  // namespace

TEST_CASE("coordinate spans are solid, slanted lines are not") {
  CHECK(is_solid({dim3, {Vec::unit(3, 0)}}).solid);
  CHECK(is_solid({dim3, {}}).solid);  // the zero ideal

  const SolidityReport report = is_solid({dim2, {Vec{Rational(1), Rational(1)}}});
  CHECK_FALSE(report.solid);
  REQUIRE(report.witness.has_value());
  const auto& [x, y] = *report.witness;
  CHECK(y == Vec{Rational(1), Rational(1)});
  CHECK(x == Vec{Rational(1), Rational(0)});
  CHECK(cwise_leq(abs_vec(x), abs_vec(y)));
  CHECK_FALSE(in_span({y}, x));
}

TEST_CASE("ideal generation takes the union of supports") {
  CHECK(ideal_generated_by(dim3, {Vec::zero(3)}).coords.empty());
  CHECK(ideal_generated_by(dim3, {Vec{Rational(1), Rational(0), Rational(2)}}).coords ==
        std::vector<int>{0, 2});
  CHECK(ideal_generated_by(dim3, {Vec::unit(3, 0), Vec::unit(3, 1)}).coords ==
        std::vector<int>{0, 1});
}

TEST_CASE("generated ideals are minimal solid supersets") {
  Rng rng(15);
  for (int t = 0; t < 100; ++t) {
    const GradedSpace sp = GradedSpace::with_default_grade(static_cast<int>(rng.next_int(1, 6)));
    std::vector<Vec> gens;
    for (int i = 0, n = static_cast<int>(rng.next_int(1, 3)); i < n; ++i) {
      gens.push_back(random_vec(rng, sp.dim));
    }
    const CoordinateIdeal ideal = ideal_generated_by(sp, gens);
    for (const Vec& g : gens) CHECK(ideal.contains(g));

    std::vector<Vec> basis;
    for (int j : ideal.coords) basis.push_back(Vec::unit(sp.dim, j));
    CHECK(is_solid({sp, basis}).solid);

    // Minimality: dropping any coordinate excludes a generator.
    for (int drop : ideal.coords) {
      std::vector<int> rest;
      for (int j : ideal.coords) {
        if (j != drop) rest.push_back(j);
      }
      const CoordinateIdeal smaller(sp, rest);
      bool excluded = false;
      for (const Vec& g : gens) {
        if (!smaller.contains(g)) excluded = true;
      }
      CHECK(excluded);
    }
  }
}

TEST_CASE("principal ideal membership via the domination multiplier") {
  const Vec gen{Rational(1), Rational(0), Rational(2)};
  CHECK(principal_ideal_lambda(gen, Vec{Rational(3), Rational(0), Rational(-1)}) == Rational(3));
  CHECK_FALSE(principal_ideal_lambda(gen, Vec::unit(3, 1)).has_value());
  CHECK(principal_ideal_lambda(gen, Vec::zero(3)) == Rational(0));
}

TEST_CASE("disjoint complements") {
  const CoordinateIdeal b(dim3, {0});
  CHECK(disjoint_complement(b).coords == std::vector<int>{1, 2});
  CHECK(disjoint_complement(disjoint_complement(b)) == b);

  Rng rng(16);
  for (int t = 0; t < 100; ++t) {
    // Members of the ideal and of its complement are always disjoint.
    Vec inside = Vec::zero(3);
    inside[0] = rng.next_rational();
    Vec outside = Vec::zero(3);
    outside[1] = rng.next_rational();
    outside[2] = rng.next_rational();
    CHECK(cwise_min(abs_vec(inside), abs_vec(outside)).is_zero());
  }
}

TEST_CASE("band projection splits and reassembles") {
  const CoordinateIdeal b(dim2, {0});
  const auto [x1, x2] = band_projection(b, Vec{Rational(3), Rational(-4)});
  CHECK(x1 == Vec{Rational(3), Rational(0)});
  CHECK(x2 == Vec{Rational(0), Rational(-4)});

  const Vec member{Rational(5), Rational(0)};
  CHECK(band_projection(b, member).first == member);
  CHECK(band_projection(b, member).second.is_zero());

  Rng rng(17);
  for (int t = 0; t < 300; ++t) {
    const Vec x = random_vec(rng, 2);
    const auto [p, q] = band_projection(b, x);
    CHECK(p + q == x);
    CHECK(cwise_min(abs_vec(p), abs_vec(q)).is_zero());
    // Idempotent and positive.
    CHECK(band_projection(b, p).first == p);
    if (cwise_leq(Vec::zero(2), x)) CHECK(cwise_leq(Vec::zero(2), p));
  }
}

TEST_CASE("stabilization index closed form") {
  CHECK(stabilization_index(dim2, Vec{Rational(3), Rational(5)}, Vec{Rational(1), Rational(0)}) == 3);
  CHECK(stabilization_index(dim2, Vec{Rational(3), Rational(5)}, Vec::zero(2)) == 1);
  CHECK(stabilization_index(dim2, Vec::zero(2), Vec{Rational(1), Rational(2)}) == 1);
  CHECK_THROWS_AS(stabilization_index(dim2, Vec{Rational(-1), Rational(0)}, Vec::zero(2)),
                  InputError);
}

TEST_CASE("stabilization index matches the brute-force scan") {
  Rng rng(18);
  for (int t = 0; t < 500; ++t) {
    const GradedSpace sp = GradedSpace::with_default_grade(static_cast<int>(rng.next_int(1, 6)));
    Vec x = Vec::zero(sp.dim);
    Vec y = Vec::zero(sp.dim);
    for (int i = 0; i < sp.dim; ++i) {
      x[i] = Rational(rng.next_int(0, 40), rng.next_int(1, 8));
      y[i] = Rational(rng.next_int(0, 12), rng.next_int(1, 8));
    }
    const long index = stabilization_index(sp, x, y);
    CHECK(index == oracle::stabilization_naive(x, y, index + 10));
  }
}

TEST_CASE("coordinate ideals are simultaneously ideals, sigma-ideals and bands") {
  Rng rng(20);
  for (int t = 0; t < 50; ++t) {
    const int dim = static_cast<int>(rng.next_int(1, 6));
    const GradedSpace sp = GradedSpace::with_default_grade(dim);
    std::vector<int> coords;
    for (int j = 0; j < dim; ++j) {
      if (rng.next_bool()) coords.push_back(j);
    }
    const CoordinateIdeal ideal(sp, coords);

    // Band: equals its double disjoint complement.
    CHECK(disjoint_complement(disjoint_complement(ideal)) == ideal);

    // Solid: downward closed under |x| <= |y| on random members.
    const auto member = [&] {
      Vec v = Vec::zero(dim);
      for (int j : ideal.coords) v[j] = rng.next_rational();
      return v;
    };
    const Vec y = member();
    Vec x = Vec::zero(dim);
    for (int j : ideal.coords) x[j] = y[j] * Rational(rng.next_int(0, 4), 4);
    CHECK(cwise_leq(abs_vec(x), abs_vec(y)));
    CHECK(ideal.contains(x));

    // Sigma-ideal spot check: monotone limits of member sequences stay in.
    // x_k = base + drift * r^k increasing to base needs drift <= 0.
    Vec base = Vec::zero(dim);
    Vec drift = Vec::zero(dim);
    for (int j : ideal.coords) {
      base[j] = rng.next_nonneg_rational(20, 5);
      drift[j] = -std::min(base[j], rng.next_nonneg_rational(20, 5));
    }
    for (long k = 0; k < 5; ++k) {
      const Vec term = base + rational_pow(Rational(1, 2), static_cast<unsigned long>(k)) * drift;
      CHECK(ideal.contains(term));
    }
    CHECK(ideal.contains(base));
  }
}

TEST_CASE("principal ideals act as projection bands") {
  SUBCASE("worked example") {
    const Vec y = Vec::unit(2, 0);
    const Vec x{Rational(3), Rational(7)};
    const long m = stabilization_index(dim2, x, y);
    CHECK(m == 3);
    CHECK(cwise_min(x, Rational(m) * y) == Vec{Rational(3), Rational(0)});
    const PrincipalProjectionReport report = verify_principal_projection(dim2, y, 50, 1);
    CHECK(report.ok());
  }
  SUBCASE("zero generator") {
    const PrincipalProjectionReport report = verify_principal_projection(dim2, Vec::zero(2), 20, 2);
    CHECK(report.ok());
  }
  SUBCASE("random generators") {
    Rng rng(19);
    for (int t = 0; t < 20; ++t) {
      const GradedSpace sp = GradedSpace::with_default_grade(static_cast<int>(rng.next_int(1, 6)));
      const PrincipalProjectionReport report =
          verify_principal_projection(sp, random_nonneg_vec(rng, sp.dim), 50, rng.next_u64());
      CHECK(report.ok());
    }
  }
}
