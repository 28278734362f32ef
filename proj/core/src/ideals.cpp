#include "frs/ideals.hpp"

#include <algorithm>
#include <set>

#include "frs/linalg.hpp"

namespace frs {

CoordinateIdeal::CoordinateIdeal(GradedSpace space, std::vector<int> coordinates)
    : ambient(std::move(space)), coords(std::move(coordinates)) {
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  for (int j : coords) {
    if (j < 0 || j >= ambient.dim) {
      throw InputError("ideal coordinate " + std::to_string(j + 1) + " out of range");
    }
  }
}

bool CoordinateIdeal::contains_coord(int j) const {
  return std::binary_search(coords.begin(), coords.end(), j);
}

bool CoordinateIdeal::contains(const Vec& x) const {
  if (x.dim() != ambient.dim) return false;
  for (int i = 0; i < x.dim(); ++i) {
    if (x[i] != 0 && !contains_coord(i)) return false;
  }
  return true;
}

SolidityReport is_solid(const SubspaceSpec& subspace) {
  SolidityReport report;

  std::set<int> support;
  for (const Vec& v : subspace.basis) {
    if (v.dim() != subspace.ambient.dim) {
      throw InputError("is_solid: basis vector dimension mismatch");
    }
    for (int i : v.support()) support.insert(i);
  }

  // Solid iff the span contains every unit vector of its support union,
  // i.e. iff it equals that coordinate span.
  for (int i : support) {
    if (in_span(subspace.basis, Vec::unit(subspace.ambient.dim, i))) continue;
    report.solid = false;
    // Witness: a spanning vector touching i gives y; its i-th coordinate
    // alone gives x with |x| <= |y| but x outside the span.
    for (const Vec& v : subspace.basis) {
      if (v[i] == 0) continue;
      Vec x = Vec::zero(subspace.ambient.dim);
      x[i] = v[i];
      report.witness = std::make_pair(x, v);
      return report;
    }
  }
  report.solid = true;
  return report;
}

CoordinateIdeal ideal_generated_by(const GradedSpace& space, const std::vector<Vec>& generators) {
  std::set<int> support;
  for (const Vec& g : generators) {
    if (g.dim() != space.dim) throw InputError("ideal_generated_by: generator dimension mismatch");
    for (int i : g.support()) support.insert(i);
  }
  return CoordinateIdeal(space, std::vector<int>(support.begin(), support.end()));
}

std::optional<Rational> principal_ideal_lambda(const Vec& generator, const Vec& x) {
  require_same_dim(generator, x, "principal_ideal_lambda");
  Rational lambda(0);
  for (int i = 0; i < x.dim(); ++i) {
    const Rational ax = abs(x[i]);
    if (ax == 0) continue;
    const Rational ag = abs(generator[i]);
    if (ag == 0) return std::nullopt;
    lambda = std::max(lambda, ax / ag);
  }
  return lambda;
}

CoordinateIdeal disjoint_complement(const CoordinateIdeal& ideal) {
  std::vector<int> complement;
  for (int j = 0; j < ideal.ambient.dim; ++j) {
    if (!ideal.contains_coord(j)) complement.push_back(j);
  }
  return CoordinateIdeal(ideal.ambient, std::move(complement));
}

std::pair<Vec, Vec> band_projection(const CoordinateIdeal& band, const Vec& x) {
  if (x.dim() != band.ambient.dim) throw InputError("band_projection: dimension mismatch");
  Vec inside = Vec::zero(x.dim());
  Vec outside = Vec::zero(x.dim());
  for (int i = 0; i < x.dim(); ++i) {
    (band.contains_coord(i) ? inside : outside)[i] = x[i];
  }
  return {inside, outside};
}

long stabilization_index(const GradedSpace& space, const Vec& x, const Vec& y) {
  if (x.dim() != space.dim || y.dim() != space.dim) {
    throw InputError("stabilization_index: dimension mismatch");
  }
  for (int i = 0; i < space.dim; ++i) {
    if (x[i] < 0 || y[i] < 0) {
      throw InputError("stabilization_index requires nonnegative inputs");
    }
  }

  BigInt m(1);
  for (int i = 0; i < space.dim; ++i) {
    if (y[i] > 0) m = std::max(m, rational_ceil(x[i] / y[i]));
  }
  const long index = static_cast<long>(m);

  // Self-check: the sequence x /\ n*y must change strictly until n = index
  // and be constant afterwards.
  const auto term = [&](long n) { return cwise_min(x, Rational(n) * y); };
  Vec prev = term(1);
  for (long n = 2; n <= index + 5; ++n) {
    Vec cur = term(n);
    const bool expect_change = n <= index;
    if ((cur != prev) != expect_change) {
      throw std::logic_error("stabilization_index: closed form disagrees with direct scan");
    }
    prev = std::move(cur);
  }
  return index;
}

PrincipalProjectionReport verify_principal_projection(const GradedSpace& space, const Vec& y,
                                                      long samples, std::uint64_t seed) {
  for (int i = 0; i < y.dim(); ++i) {
    if (y[i] < 0) throw InputError("verify_principal_projection requires y >= 0");
  }
  const CoordinateIdeal ideal = ideal_generated_by(space, {y});

  Rng rng(seed);
  PrincipalProjectionReport report;
  report.trials = samples;
  for (long t = 0; t < samples; ++t) {
    const Vec x = random_nonneg_vec(rng, space.dim);
    const long m = stabilization_index(space, x, y);
    const Vec supremum = cwise_min(x, Rational(m) * y);
    const Vec projected = band_projection(ideal, x).first;
    if (supremum != projected) {
      report.mismatches.push_back({x, supremum, projected});
    }
  }
  return report;
}

}  // namespace frs
