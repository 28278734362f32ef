#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "frs/graded_space.hpp"
#include "frs/vec.hpp"

namespace frs {

/// Fuzzy ideal of a graded space in canonical form: the span of the unit
/// vectors at the listed coordinates. In the componentwise model the solid
/// linear subspaces are exactly these coordinate spans, which makes ideal
/// arithmetic exact and linear in the dimension. Coordinates are 0-based
/// internally and sorted; serialization is 1-based.
struct CoordinateIdeal {
  GradedSpace ambient;
  std::vector<int> coords;

  CoordinateIdeal() = default;
  CoordinateIdeal(GradedSpace space, std::vector<int> coordinates);

  bool contains_coord(int j) const;
  /// Membership of a vector: supported inside coords.
  bool contains(const Vec& x) const;
  bool is_zero_ideal() const { return coords.empty(); }
  bool is_full() const { return static_cast<int>(coords.size()) == ambient.dim; }

  bool operator==(const CoordinateIdeal& other) const = default;
};

/// A linear subspace given by a spanning set; candidate input to the
/// solidity test.
struct SubspaceSpec {
  GradedSpace ambient;
  std::vector<Vec> basis;
};

struct SolidityReport {
  bool solid = false;
  /// On failure: y lies in the subspace, x does not, and |x| <= |y|.
  std::optional<std::pair<Vec, Vec>> witness;  // (x, y)
};

/// Decides whether the spanned subspace is fuzzy solid. Holds exactly when
/// the subspace equals the coordinate span of its support union.
SolidityReport is_solid(const SubspaceSpec& subspace);

/// Smallest fuzzy ideal containing the generators: the coordinate span of
/// the union of their supports. A singleton generator gives the principal
/// ideal.
CoordinateIdeal ideal_generated_by(const GradedSpace& space, const std::vector<Vec>& generators);

/// Membership in the principal ideal of g via the domination test
/// |x| <= lambda * |g|; returns the minimal lambda when it exists.
std::optional<Rational> principal_ideal_lambda(const Vec& generator, const Vec& x);

/// Ideal on the complementary coordinate set. Every member of the ideal is
/// disjoint from every member of the complement.
CoordinateIdeal disjoint_complement(const CoordinateIdeal& ideal);

/// Splits x = x1 + x2 with x1 in the band and x2 in its complement; the
/// decomposition is unique.
std::pair<Vec, Vec> band_projection(const CoordinateIdeal& band, const Vec& x);

/// Least m >= 1 with x /\ n*y = x /\ m*y for all n >= m (x, y >= 0). The
/// closed form max over supp(y) of ceil(x_i / y_i) is self-verified by a
/// direct scan of n = 1 .. m+5.
long stabilization_index(const GradedSpace& space, const Vec& x, const Vec& y);

struct PrincipalProjectionMismatch {
  Vec x;
  Vec via_stabilization;
  Vec via_projection;
};

struct PrincipalProjectionReport {
  long trials = 0;
  std::vector<PrincipalProjectionMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// For random x >= 0 checks that sup_n(x /\ n*y), obtained through the
/// stabilization index, equals the band projection of x onto the principal
/// ideal of y.
PrincipalProjectionReport verify_principal_projection(const GradedSpace& space, const Vec& y,
                                                      long samples, std::uint64_t seed);

}  // namespace frs
