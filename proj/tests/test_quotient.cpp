#include "doctest.h"

#include "frs/quotient.hpp"

using namespace frs;

namespace {

QuotientSpace make_quotient(int dim, std::vector<int> coords) {
  const GradedSpace sp = GradedSpace::with_default_grade(dim);
  return QuotientSpace(sp, CoordinateIdeal(sp, std::move(coords)));
}

}  // namespace

TEST_CASE("projection to canonical representatives") {
  const QuotientSpace q = make_quotient(3, {2});
  CHECK(project(q, Vec{Rational(1), Rational(2), Rational(5)}) ==
        project(q, Vec{Rational(1), Rational(2), Rational(7)}));
  CHECK(project(q, Vec{Rational(0), Rational(0), Rational(9)}).representative.is_zero());
  CHECK(project(q, Vec{Rational(1), Rational(2), Rational(5)}).representative ==
        Vec{Rational(1), Rational(2), Rational(0)});
  CHECK(q.reduced_dim == 2);
}

TEST_CASE("three-valued quotient grade") {
  const QuotientSpace q = make_quotient(3, {2});
  const QClass f = project(q, Vec{Rational(0), Rational(0), Rational(9)});
  const QClass g = project(q, Vec{Rational(1), Rational(1), Rational(-4)});
  CHECK(quotient_grade(q, f, f) == 1);
  CHECK(quotient_grade(q, f, g) == Rational(2, 3));
  CHECK(quotient_grade(q, project(q, Vec::unit(3, 0)), project(q, Vec::unit(3, 1))) == 0);
}

TEST_CASE("quotient grade stays 2/3 even when the ambient alpha differs") {
  const GradedSpace sp(3, Rational(3, 4));
  const QuotientSpace q(sp, CoordinateIdeal(sp, {2}));
  const QClass f = project(q, Vec::zero(3));
  const QClass g = project(q, Vec{Rational(1), Rational(1), Rational(0)});
  CHECK(quotient_grade(q, f, g) == Rational(2, 3));
}

TEST_CASE("foreign classes are rejected") {
  const QuotientSpace q = make_quotient(3, {2});
  CHECK_THROWS_AS(quotient_grade(q, QClass{Vec{Rational(0), Rational(0), Rational(1)}},
                                 QClass{Vec::zero(3)}),
                  InputError);
}

TEST_CASE("quotient lattice battery") {
  SUBCASE("worked join example") {
    const QuotientSpace q = make_quotient(3, {2});
    const QClass join = qclass_join(q, project(q, Vec{Rational(1), Rational(0), Rational(5)}),
                                    project(q, Vec{Rational(0), Rational(1), Rational(-2)}));
    CHECK(join.representative == Vec{Rational(1), Rational(1), Rational(0)});
  }
  SUBCASE("full ideal gives the trivial quotient and vacuous passes") {
    const QuotientSpace q = make_quotient(3, {0, 1, 2});
    CHECK(q.reduced_dim == 0);
    const QuotientLatticeReport report = check_quotient_lattice(q, 50, 3);
    CHECK(report.ok());
  }
  SUBCASE("random pairs in dimension 6 with a two-coordinate ideal") {
    const QuotientSpace q = make_quotient(6, {1, 4});
    const QuotientLatticeReport report = check_quotient_lattice(q, 1000, 4);
    CHECK(report.ok());
    CHECK(report.trials == 1000);
  }
}

TEST_CASE("descended identities on random quotients") {
  Rng rng(2020);
  for (int t = 0; t < 50; ++t) {
    const int dim = static_cast<int>(rng.next_int(2, 6));
    std::vector<int> coords;
    for (int j = 0; j < dim; ++j) {
      if (rng.next_bool()) coords.push_back(j);
    }
    const QuotientSpace q = make_quotient(dim, coords);
    const Vec f = random_vec(rng, dim);
    const Vec g = random_vec(rng, dim);
    // Projection commutes with the lattice operations.
    CHECK(qclass_join(q, project(q, f), project(q, g)) == project(q, cwise_max(f, g)));
    CHECK(qclass_meet(q, project(q, f), project(q, g)) == project(q, cwise_min(f, g)));
    // f + g = (f v g) + (f /\ g) descends to classes.
    const QClass sum = qclass_add(q, project(q, f), project(q, g));
    const QClass split = qclass_add(q, qclass_join(q, project(q, f), project(q, g)),
                                    qclass_meet(q, project(q, f), project(q, g)));
    CHECK(sum == split);
  }
}

TEST_CASE("quotient antisymmetry") {
  Rng rng(2021);
  const QuotientSpace q = make_quotient(4, {1});
  for (int t = 0; t < 300; ++t) {
    const QClass f = project(q, random_vec(rng, 4));
    const QClass g = project(q, random_vec(rng, 4));
    if (quotient_grade(q, f, g) > half() && quotient_grade(q, g, f) > half()) {
      CHECK(f == g);
    }
  }
}

TEST_CASE("canonical projection is a homomorphism with kernel the ideal") {
  SUBCASE("one killed coordinate in dimension 2") {
    const QuotientSpace q = make_quotient(2, {1});
    const RationalOperator proj = projection_operator(q);
    CHECK(proj.rows() == 1);
    CHECK(proj.at(0, 0) == 1);
    CHECK(proj.at(0, 1) == 0);
    const ProjectionHomReport report = check_projection_hom(q);
    CHECK(report.ok());
    CHECK(kernel_ideal(proj).coords == std::vector<int>{1});
  }
  SUBCASE("empty ideal gives the identity") {
    const QuotientSpace q = make_quotient(3, {});
    const ProjectionHomReport report = check_projection_hom(q);
    CHECK(report.ok());
    CHECK(kernel_ideal(projection_operator(q)).coords.empty());
  }
  SUBCASE("positive parts pass through the projection") {
    const QuotientSpace q = make_quotient(2, {1});
    const RationalOperator proj = projection_operator(q);
    const Vec x{Rational(-1), Rational(4)};
    CHECK(proj.apply(positive_part(x)) == positive_part(proj.apply(x)));
    CHECK(positive_part(proj.apply(x)).is_zero());
  }
}

TEST_CASE("archimedean battery holds for coordinate ideals") {
  SUBCASE("zero ideal") {
    const ArchimedeanBattery battery = archimedean_battery(make_quotient(3, {}));
    CHECK(battery.all());
  }
  SUBCASE("random ideals") {
    Rng rng(2022);
    for (int t = 0; t < 20; ++t) {
      const int dim = static_cast<int>(rng.next_int(2, 6));
      std::vector<int> coords;
      for (int j = 0; j < dim; ++j) {
        if (rng.next_bool()) coords.push_back(j);
      }
      const ArchimedeanBattery battery =
          archimedean_battery(make_quotient(dim, coords), 16, rng.next_u64());
      CHECK(battery.archimedean);
      CHECK(battery.uniformly_closed);
      CHECK(battery.cond3);
      CHECK(battery.cond4);
    }
  }
}
