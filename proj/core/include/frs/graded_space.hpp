#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "frs/rational.hpp"
#include "frs/rng.hpp"
#include "frs/vec.hpp"

namespace frs {

/// Rational n-vectors under the graded componentwise order: the grade of
/// (x, y) is 1 when x = y, alpha when x <= y componentwise with x != y, and 0
/// otherwise. alpha must exceed 1/2, or no comparability would ever pass the
/// threshold test; the classical choice is 2/3.
struct GradedSpace {
  int dim = 0;
  Rational alpha = Rational(2, 3);

  GradedSpace() = default;
  GradedSpace(int dimension, Rational grade);

  static GradedSpace with_default_grade(int dimension) {
    return GradedSpace(dimension, Rational(2, 3));
  }

  bool operator==(const GradedSpace& other) const = default;
};

/// Order grade of the pair (x, y); one of {0, alpha, 1}.
Rational order_grade(const GradedSpace& space, const Vec& x, const Vec& y);

struct LatticeOps {
  Vec join;
  Vec meet;
  Vec pos;
  Vec neg;
  Vec abs;
};

/// Join/meet of the pair plus the positive part, negative part and modulus
/// of x, all componentwise.
LatticeOps lattice_ops(const GradedSpace& space, const Vec& x, const Vec& y);

using GradeFn = std::function<Rational(const Vec&, const Vec&)>;

struct CompatibilityViolation {
  Vec x1;
  Vec x2;
  Vec shift;        // translation witness; unused for scaling failures
  Rational scalar;  // scaling witness; 0 for translation failures
  bool translation_failed = false;
};

struct CompatibilityReport {
  long trials = 0;
  std::vector<CompatibilityViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Samples random triples and positive scalars and verifies that grades are
/// preserved by translation and by positive scaling. An alternative grade
/// function can be injected, which is how the mutation harness feeds
/// deliberately corrupted orders through the same check.
CompatibilityReport check_compatibility(const GradedSpace& space, long samples,
                                        std::uint64_t seed, const GradeFn& grade = {});

/// Structural Archimedean check: for sampled x > 0 and candidate bounds b, a
/// multiplier lambda with lambda*x exceeding b at some coordinate is
/// constructed and verified, so no set {lambda*x : lambda > 0} is bounded
/// above. Always true for this model.
bool check_archimedean(const GradedSpace& space);

/// Random vector with numerators in [-100, 100] and denominators in [1, 20].
Vec random_vec(Rng& rng, int dim);
Vec random_nonneg_vec(Rng& rng, int dim);

}  // namespace frs
