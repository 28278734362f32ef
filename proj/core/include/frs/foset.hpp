#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frs/rational.hpp"

namespace frs {

/// Membership table of a fuzzy subset of a finite carrier.
struct FuzzySubset {
  std::vector<Rational> membership;

  int size() const { return static_cast<int>(membership.size()); }
  const Rational& operator[](int i) const { return membership[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return membership[static_cast<std::size_t>(i)]; }

  /// An element belongs to the subset when its membership value is positive.
  bool contains(int i) const { return (*this)[i] > 0; }
};

/// A fuzzy relation on a finite carrier: grades[x][y] is the degree to which
/// x precedes y. Validating the three fuzzy-order axioms is a separate step
/// (validate_fuzzy_order); the type itself only guards shape and scale.
struct FuzzyOrderMatrix {
  static constexpr int kDefaultSizeLimit = 64;

  int size = 0;
  std::vector<std::vector<Rational>> grades;
  std::vector<std::string> labels;  // optional; empty or one name per element

  FuzzyOrderMatrix() = default;
  /// Zero-initialized grade table. All operations on these matrices are
  /// exhaustive O(size^3) scans, hence the configurable cap.
  explicit FuzzyOrderMatrix(int carrier_size, int size_limit = kDefaultSizeLimit);

  const Rational& at(int x, int y) const {
    return grades[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  }
  Rational& at(int x, int y) {
    return grades[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  }

  std::string label(int i) const;

  /// Throws InputError if any entry lies outside [0, 1] or a row is ragged.
  void check_well_formed() const;
};

enum class FosetAxiom { Reflexivity, Antisymmetry, Transitivity };

const char* axiom_name(FosetAxiom axiom);

/// One counterexample to an axiom. The fields are carrier indices:
///   Reflexivity   (x, x, x)  with grade(x, x) != 1
///   Antisymmetry  (x, y, y)  with x != y and grade(x,y) + grade(y,x) > 1
///   Transitivity  (x, y, z)  with grade(x,z) < min(grade(x,y), grade(y,z))
struct AxiomViolation {
  FosetAxiom axiom;
  int x = 0;
  int y = 0;
  int z = 0;
};

struct AxiomReport {
  bool reflexive = false;
  bool antisymmetric = false;
  bool transitive = false;
  /// First witness per failed axiom, in row-major scan order.
  std::vector<AxiomViolation> violations;

  bool valid() const { return reflexive && antisymmetric && transitive; }
};

/// Checks the three fuzzy-order axioms exactly. Each failed axiom carries the
/// first counterexample found in row-major scan order.
AxiomReport validate_fuzzy_order(const FuzzyOrderMatrix& m);

enum class Direction { Up, Down };

/// Down-set of x maps y to grade(y, x); up-set maps y to grade(x, y).
FuzzySubset up_down_set(const FuzzyOrderMatrix& m, int x, Direction direction);

struct BoundsResult {
  FuzzySubset upper;
  FuzzySubset lower;
};

/// Upper and lower bound fuzzy sets of a nonempty crisp subset.
/// upper(y) is 0 as soon as some member x has grade(x, y) <= 1/2, otherwise
/// the minimum of grade(x, y) over the members; lower is dual.
/// The empty subset is rejected (the bound of nothing is left undefined).
BoundsResult bounds(const FuzzyOrderMatrix& m, const std::vector<int>& subset);

enum class ExtremumMode { Sup, Inf };

/// Supremum (or infimum) of a nonempty subset, when it exists:
/// z is the sup when z is an upper bound and every upper bound y satisfies
/// upper({z})(y) > 0. Antisymmetry of a valid order makes it unique.
/// Precondition: m passes validate_fuzzy_order.
std::optional<int> sup_inf(const FuzzyOrderMatrix& m, const std::vector<int>& subset,
                           ExtremumMode mode);

}  // namespace frs
