#include "doctest.h"

#include "frs/linear_feasibility.hpp"
#include "frs/rng.hpp"

using namespace frs;

namespace {

std::vector<Rational> rat(std::vector<int> v) {
  std::vector<Rational> out;
  for (int x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("feasible box problems produce valid points") {
  LinearFeasibilityProblem lp(2);
  lp.add(rat({1, 0}), Relation::GreaterEq, Rational(1));
  lp.add(rat({1, 0}), Relation::LessEq, Rational(3));
  lp.add(rat({0, 1}), Relation::GreaterEq, Rational(-2));
  lp.add(rat({0, 1}), Relation::LessEq, Rational(2));
  lp.add(rat({1, 1}), Relation::LessEq, Rational(4));

  CHECK(lp.check().feasible);
  const auto point = lp.feasible_point();
  REQUIRE(point.has_value());
  CHECK((*point)[0] >= 1);
  CHECK((*point)[0] <= 3);
  CHECK((*point)[1] >= -2);
  CHECK((*point)[1] <= 2);
  CHECK((*point)[0] + (*point)[1] <= 4);
}

TEST_CASE("infeasibility comes with a checkable certificate") {
  LinearFeasibilityProblem lp(2);
  std::vector<LinearConstraint> cons = {
      {rat({1, 1}), Relation::GreaterEq, Rational(4)},
      {rat({1, 0}), Relation::LessEq, Rational(1)},
      {rat({0, 1}), Relation::LessEq, Rational(2)},
  };
  for (const auto& c : cons) lp.add(c);

  const auto result = lp.check();
  REQUIRE_FALSE(result.feasible);
  REQUIRE(result.farkas.size() == cons.size());

  // The signed combination must cancel the coefficients and leave a
  // negative constant, with signs respecting each relation.
  Rational rhs(0);
  std::vector<Rational> combined(2);
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const Rational& w = result.farkas[i];
    if (cons[i].rel == Relation::LessEq) CHECK(w >= 0);
    if (cons[i].rel == Relation::GreaterEq) CHECK(w <= 0);
    for (int j = 0; j < 2; ++j) {
      combined[static_cast<std::size_t>(j)] += w * cons[i].coeffs[static_cast<std::size_t>(j)];
    }
    rhs += w * cons[i].rhs;
  }
  CHECK(combined[0] == 0);
  CHECK(combined[1] == 0);
  CHECK(rhs < 0);
}

TEST_CASE("minimization finds exact optima") {
  SUBCASE("simple polytope corner") {
    LinearFeasibilityProblem lp(2);
    lp.add(rat({1, 0}), Relation::GreaterEq, Rational(1));
    lp.add(rat({0, 1}), Relation::GreaterEq, Rational(2));
    const auto opt = lp.minimize({Rational(2), Rational(3)});
    REQUIRE(opt.feasible);
    REQUIRE(opt.bounded);
    CHECK(opt.value == 8);  // 2*1 + 3*2
  }
  SUBCASE("unbounded direction is detected") {
    LinearFeasibilityProblem lp(1);
    lp.add(rat({1}), Relation::LessEq, Rational(5));
    const auto opt = lp.minimize({Rational(1)});
    CHECK(opt.feasible);
    CHECK_FALSE(opt.bounded);
  }
  SUBCASE("equalities narrow the region") {
    LinearFeasibilityProblem lp(2);
    lp.add(rat({1, 1}), Relation::Equal, Rational(10));
    lp.add(rat({1, 0}), Relation::GreaterEq, Rational(0));
    lp.add(rat({0, 1}), Relation::GreaterEq, Rational(0));
    const auto opt = lp.minimize({Rational(1), Rational(5)});
    REQUIRE(opt.bounded);
    CHECK(opt.value == 10);  // all weight on the cheap coordinate
  }
}

TEST_CASE("lexicographic minimum is canonical") {
  LinearFeasibilityProblem lp(2);
  lp.add(rat({1, 1}), Relation::GreaterEq, Rational(2));
  lp.add(rat({1, 0}), Relation::GreaterEq, Rational(0));
  lp.add(rat({0, 1}), Relation::GreaterEq, Rational(0));
  lp.add(rat({1, 0}), Relation::LessEq, Rational(5));
  lp.add(rat({0, 1}), Relation::LessEq, Rational(5));
  const auto point = lp.lexicographic_minimum();
  REQUIRE(point.has_value());
  CHECK((*point)[0] == 0);
  CHECK((*point)[1] == 2);
}

TEST_CASE("lexicographic minimum rejects unbounded coordinates") {
  LinearFeasibilityProblem lp(1);
  lp.add(rat({1}), Relation::LessEq, Rational(0));
  CHECK_THROWS_AS(lp.lexicographic_minimum(), PreconditionError);
}

TEST_CASE("random bounded systems: extracted points satisfy every constraint") {
  Rng rng(909);
  for (int t = 0; t < 150; ++t) {
    const int vars = static_cast<int>(rng.next_int(1, 4));
    LinearFeasibilityProblem lp(vars);
    std::vector<LinearConstraint> cons;
    // Box to keep everything bounded, plus random cuts.
    for (int v = 0; v < vars; ++v) {
      std::vector<Rational> e(static_cast<std::size_t>(vars));
      e[static_cast<std::size_t>(v)] = 1;
      cons.push_back({e, Relation::GreaterEq, Rational(-5)});
      cons.push_back({e, Relation::LessEq, Rational(5)});
    }
    for (int c = 0, n = static_cast<int>(rng.next_int(0, 3)); c < n; ++c) {
      std::vector<Rational> coeffs(static_cast<std::size_t>(vars));
      for (int v = 0; v < vars; ++v) coeffs[static_cast<std::size_t>(v)] = rng.next_rational(3, 2);
      cons.push_back({coeffs, rng.next_bool() ? Relation::LessEq : Relation::GreaterEq,
                      rng.next_rational(6, 2)});
    }
    for (const auto& c : cons) lp.add(c);

    const auto satisfied = [&](const std::vector<Rational>& point) {
      for (const auto& c : cons) {
        Rational lhs(0);
        for (int v = 0; v < vars; ++v) {
          lhs += c.coeffs[static_cast<std::size_t>(v)] * point[static_cast<std::size_t>(v)];
        }
        switch (c.rel) {
          case Relation::LessEq:
            if (lhs > c.rhs) return false;
            break;
          case Relation::GreaterEq:
            if (lhs < c.rhs) return false;
            break;
          case Relation::Equal:
            if (lhs != c.rhs) return false;
            break;
        }
      }
      return true;
    };

    const auto feasibility = lp.check();
    const auto point = lp.feasible_point();
    CHECK(feasibility.feasible == point.has_value());
    if (point) {
      CHECK(satisfied(*point));
      const auto lex = lp.lexicographic_minimum();
      REQUIRE(lex.has_value());
      CHECK(satisfied(*lex));
      // The lexicographic point cannot beat the single-coordinate optimum.
      std::vector<Rational> e0(static_cast<std::size_t>(vars));
      e0[0] = 1;
      const auto opt = lp.minimize(e0);
      REQUIRE(opt.bounded);
      CHECK((*lex)[0] == opt.value);
    }
  }
}
