#pragma once

#include <optional>
#include <vector>

#include "frs/rational.hpp"

namespace frs {

enum class Relation { LessEq, GreaterEq, Equal };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation rel = Relation::LessEq;
  Rational rhs;
};

/// Exact rational linear feasibility and optimization by Fourier-Motzkin
/// elimination. Deterministic throughout: constraints are normalized and
/// deduplicated, and extracted points always take the canonical value in
/// their feasible interval (lower bound when finite, else upper bound,
/// else zero). Desk-scale only; elimination can square the constraint
/// count per variable.
class LinearFeasibilityProblem {
 public:
  explicit LinearFeasibilityProblem(int variables);

  int variables() const { return variables_; }
  int constraint_count() const { return static_cast<int>(constraints_.size()); }

  void add(LinearConstraint constraint);
  void add(std::vector<Rational> coeffs, Relation rel, Rational rhs);

  struct Feasibility {
    bool feasible = false;
    /// When infeasible: signed multipliers over the added constraints whose
    /// combination of (coeffs, rhs) rows collapses to 0 <= c with c < 0.
    /// LessEq rows carry nonnegative weight, GreaterEq rows nonpositive,
    /// equalities either sign.
    std::vector<Rational> farkas;
  };
  Feasibility check() const;

  /// A feasible point, chosen canonically by back-substitution through the
  /// elimination levels; nullopt when infeasible.
  std::optional<std::vector<Rational>> feasible_point() const;

  struct Optimum {
    bool feasible = false;
    bool bounded = false;
    Rational value;
  };
  /// Exact infimum of objective . x over the feasible region.
  Optimum minimize(const std::vector<Rational>& objective) const;

  /// Coordinatewise-minimal feasible point in variable order (min x0, then
  /// x1 given x0, ...). Throws PreconditionError when some coordinate is
  /// unbounded below; nullopt when infeasible.
  std::optional<std::vector<Rational>> lexicographic_minimum() const;

 private:
  int variables_;
  std::vector<LinearConstraint> constraints_;
};

}  // namespace frs
