#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frs/graded_space.hpp"
#include "frs/ideals.hpp"
#include "frs/rational.hpp"
#include "frs/vec.hpp"

namespace frs {

/// Linear operator between graded spaces as an exact rational matrix.
struct RationalOperator {
  GradedSpace domain;    // dimension = cols
  GradedSpace codomain;  // dimension = rows
  std::vector<std::vector<Rational>> entries;

  RationalOperator() = default;
  RationalOperator(GradedSpace dom, GradedSpace cod);
  RationalOperator(GradedSpace dom, GradedSpace cod, std::vector<std::vector<Rational>> m);

  int rows() const { return codomain.dim; }
  int cols() const { return domain.dim; }
  const Rational& at(int r, int c) const {
    return entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  Rational& at(int r, int c) {
    return entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }

  Vec apply(const Vec& x) const;
  bool column_is_zero(int c) const;

  static RationalOperator identity(const GradedSpace& space);
  /// Composition: (*this) after inner.
  RationalOperator compose(const RationalOperator& inner) const;
};

/// Row-support view of a lattice homomorphism: each row carries at most one
/// nonzero entry, and that entry is positive. Kernels, images and preimages
/// are computed from this structure.
struct HomStructure {
  struct RowSupport {
    int col = -1;  // -1 for a zero row
    Rational coeff;
  };
  std::vector<RowSupport> rows;
  std::vector<int> active_cols;                 // sorted distinct support columns
  std::map<int, std::vector<int>> rows_of_col;  // active column -> its rows

  bool col_active(int c) const { return rows_of_col.count(c) != 0; }
};

/// Structural homomorphism criterion. Returns the row-support structure when
/// every row has at most one nonzero entry and all entries are nonnegative;
/// otherwise nullopt.
std::optional<HomStructure> hom_structure(const RationalOperator& op);

struct ClassifyReport {
  bool positive = false;
  bool order_bounded = false;
  bool riesz_hom = false;
  bool sigma_hom = false;

  // The two independent homomorphism oracles; they must agree.
  bool structural_hom = false;
  bool semantic_hom = false;

  std::optional<std::pair<int, int>> negative_entry;     // witness for !positive
  std::optional<int> overloaded_row;                     // row with two nonzero entries
  std::optional<std::pair<Vec, Vec>> join_counterexample;  // T(x v y) != Tx v Ty
  long semantic_trials = 0;
  bool kernel_sigma_checked = false;
};

/// Classifies positivity, order boundedness and the homomorphism property.
/// The homomorphism verdict is reached two independent ways: the structural
/// row-support criterion and a semantic join check on all signed basis pairs
/// plus random pairs. Disagreement is impossible for a correct build and
/// raises logic_error. In this finite model the sigma-homomorphism property
/// coincides with the homomorphism property; the kernel's sigma-ideal
/// closure is spot-checked on monotone geometric sequences.
ClassifyReport classify_operator(const RationalOperator& op, long trials = 1000,
                                 std::uint64_t seed = 2026);

/// Kernel of a homomorphism as a coordinate ideal (the zero columns).
/// Precondition: op is a Riesz homomorphism (kernels of general operators
/// need not be ideals).
CoordinateIdeal kernel_ideal(const RationalOperator& op);

/// Witness for nonnegativity of Tx: z >= 0 in the kernel with x + z >= 0,
/// built as the negative part of x. All three conditions are re-verified
/// before returning. Preconditions: op is a homomorphism and Tx >= 0.
Vec hom_witness_z(const RationalOperator& op, const Vec& x);

/// Witness for Ty <= Tx: w with w >= x, w >= y and Tw = Tx, built by
/// shifting the z-witness of x - y. Preconditions: op is a homomorphism and
/// Ty <= Tx.
Vec hom_witness_w(const RationalOperator& op, const Vec& x, const Vec& y);

struct ImageTheoremReport {
  struct Item {
    std::string tag;  // e.g. "2.3"
    bool pass = false;
    std::string detail;
  };
  std::vector<Item> items;

  bool ok() const;
  const Item* find(const std::string& tag) const;
};

/// Battery over a homomorphism T and an ideal B of its domain: images and
/// preimages of ideals are ideals, images of principal ideals are principal,
/// images of disjoint complements land in disjoint complements (with the
/// strictness of the containment reported), and images of projection-band
/// decompositions stay projection-band decompositions.
ImageTheoremReport verify_image_theorems(const RationalOperator& op, const CoordinateIdeal& ideal,
                                         long samples, std::uint64_t seed);

/// Geometric sequence a + b * r^k, the closed-form family on which uniform
/// convergence is decidable.
struct GeomSequence {
  Vec base;
  Vec drift;
  Rational ratio;

  GeomSequence(Vec a, Vec b, Rational r);
  int dim() const { return base.dim(); }
  Vec term(long k) const;
};

struct CauchyReport {
  bool cauchy = false;
  Vec limit;
  /// epsilon -> least index N with |x_m - x_n| <= eps*w for all m, n > N.
  std::vector<std::pair<Rational, long>> index;
  /// Coordinate where the drift escapes the regulator, when not Cauchy.
  std::optional<int> undominated_coord;
};

/// Decides whether the sequence is a w-uniform Cauchy sequence and computes
/// the exact least index for each epsilon from the geometric tail bound;
/// every index is cross-checked by a direct scan of the following window.
/// Precondition: w >= 0. A regulator that fails to dominate the drift's
/// support makes the sequence non-Cauchy; that is reported, not an error.
CauchyReport uniform_cauchy(const GeomSequence& seq, const Vec& w,
                            const std::vector<Rational>& eps_list);

std::vector<Rational> default_eps_list();

struct HomCauchyReport {
  bool pass = false;
  bool hom = false;  // false marks the positive-but-not-hom non-counterexample case
  CauchyReport source;
  CauchyReport image;
};

/// The image of a w-uniform Cauchy sequence under a positive operator is a
/// Tw-uniform Cauchy sequence with index no larger than the source's.
/// Preconditions: op positive and the source sequence Cauchy for w.
HomCauchyReport verify_hom_preserves_cauchy(const RationalOperator& op, const GeomSequence& seq,
                                            const Vec& w,
                                            const std::vector<Rational>& eps_list = default_eps_list());

RationalOperator random_hom(Rng& rng, int rows, int cols);
RationalOperator random_operator(Rng& rng, int rows, int cols, std::int64_t num_abs_max = 5,
                                 std::int64_t den_max = 4);

}  // namespace frs
