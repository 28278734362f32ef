#include "frs/graded_space.hpp"

namespace frs {

GradedSpace::GradedSpace(int dimension, Rational grade) : dim(dimension), alpha(std::move(grade)) {
  if (dim < 0) throw InputError("space dimension must be nonnegative");
  if (alpha <= half() || alpha > 1) {
    throw InputError("grade alpha = " + format_rational(alpha) + " must satisfy 1/2 < alpha <= 1");
  }
}

Rational order_grade(const GradedSpace& space, const Vec& x, const Vec& y) {
  if (x.dim() != space.dim || y.dim() != space.dim) {
    throw InputError("order_grade: vector dimension does not match the space");
  }
  if (x == y) return Rational(1);
  if (cwise_leq(x, y)) return space.alpha;
  return Rational(0);
}

LatticeOps lattice_ops(const GradedSpace& space, const Vec& x, const Vec& y) {
  if (x.dim() != space.dim || y.dim() != space.dim) {
    throw InputError("lattice_ops: vector dimension does not match the space");
  }
  LatticeOps out;
  out.join = cwise_max(x, y);
  out.meet = cwise_min(x, y);
  out.pos = positive_part(x);
  out.neg = negative_part(x);
  out.abs = abs_vec(x);
  return out;
}

CompatibilityReport check_compatibility(const GradedSpace& space, long samples,
                                        std::uint64_t seed, const GradeFn& grade) {
  if (samples < 1) throw InputError("check_compatibility requires at least one sample");
  const GradeFn mu = grade ? grade : [&space](const Vec& a, const Vec& b) {
    return order_grade(space, a, b);
  };

  Rng rng(seed);
  CompatibilityReport report;
  report.trials = samples;
  for (long t = 0; t < samples; ++t) {
    Vec x1 = random_vec(rng, space.dim);
    // Half of the samples are made comparable so the hypothesis is not vacuous.
    Vec x2 = rng.next_bool() ? x1 + random_nonneg_vec(rng, space.dim) : random_vec(rng, space.dim);
    const Vec shift = random_vec(rng, space.dim);
    const Rational lambda(rng.next_int(1, 40), rng.next_int(1, 10));

    const Rational g = mu(x1, x2);
    if (!(g > half())) continue;
    if (mu(x1 + shift, x2 + shift) < g) {
      report.violations.push_back({x1, x2, shift, Rational(0), true});
    }
    if (mu(lambda * x1, lambda * x2) < g) {
      report.violations.push_back({x1, x2, Vec::zero(space.dim), lambda, false});
    }
  }
  return report;
}

bool check_archimedean(const GradedSpace& space) {
  // Deterministic sample of positive elements and candidate bounds; for each
  // pair an explicit lambda defeating the bound is built and re-verified.
  Rng rng(0xA5C1ED);
  const int rounds = space.dim == 0 ? 0 : 32;
  for (int t = 0; t < rounds; ++t) {
    Vec x = random_nonneg_vec(rng, space.dim);
    if (x.is_zero()) x[static_cast<int>(rng.next_int(0, space.dim - 1))] = Rational(1);
    const Vec bound = random_vec(rng, space.dim);

    int witness_coord = -1;
    for (int i = 0; i < space.dim; ++i) {
      if (x[i] > 0) {
        witness_coord = i;
        break;
      }
    }
    if (witness_coord < 0) return false;  // unreachable: x was made nonzero

    Rational lambda = bound[witness_coord] / x[witness_coord] + 1;
    if (lambda <= 0) lambda = 1;
    // lambda*x must escape the candidate bound, so the bound is not an upper
    // bound of {lambda x : lambda > 0}.
    if (order_grade(space, lambda * x, bound) > half()) return false;
  }
  return true;
}

Vec random_vec(Rng& rng, int dim) {
  Vec v = Vec::zero(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.next_rational();
  return v;
}

Vec random_nonneg_vec(Rng& rng, int dim) {
  Vec v = Vec::zero(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.next_nonneg_rational();
  return v;
}

}  // namespace frs
