#include "frs/linear_feasibility.hpp"

#include <algorithm>
#include <map>

namespace frs {

namespace {

/// Internal row: coeffs . x <= rhs, plus the multipliers of the original
/// constraints whose nonnegative combination produced it.
struct Row {
  std::vector<Rational> coeffs;
  Rational rhs;
  std::vector<Rational> mult;

  bool constant() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
  }
};

void scale_row(Row& row, const Rational& factor) {
  for (Rational& c : row.coeffs) c *= factor;
  row.rhs *= factor;
  for (Rational& m : row.mult) m *= factor;
}

Row combine(const Row& upper, const Row& lower, int var) {
  // upper has coeffs[var] > 0, lower has coeffs[var] < 0; the positive
  // combination below cancels the variable.
  const Rational wu = Rational(1) / upper.coeffs[static_cast<std::size_t>(var)];
  const Rational wl = Rational(1) / -lower.coeffs[static_cast<std::size_t>(var)];
  Row out;
  const std::size_t n = upper.coeffs.size();
  out.coeffs.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.coeffs[j] = wu * upper.coeffs[j] + wl * lower.coeffs[j];
  }
  out.coeffs[static_cast<std::size_t>(var)] = 0;  // exact cancellation by construction
  out.rhs = wu * upper.rhs + wl * lower.rhs;
  out.mult.resize(upper.mult.size());
  for (std::size_t j = 0; j < out.mult.size(); ++j) {
    out.mult[j] = wu * upper.mult[j] + wl * lower.mult[j];
  }
  return out;
}

/// Scale to a canonical form and drop slack duplicates (same normal vector,
/// keep the tightest bound). Satisfied constant rows are dropped; a violated
/// one is returned as the contradiction certificate.
std::optional<Row> normalize_dedup(std::vector<Row>& rows) {
  std::map<std::vector<Rational>, Row> tightest;
  for (Row& row : rows) {
    if (row.constant()) {
      if (row.rhs < 0) return std::move(row);
      continue;
    }
    const Rational* lead = nullptr;
    for (const Rational& c : row.coeffs) {
      if (c != 0) {
        lead = &c;
        break;
      }
    }
    scale_row(row, Rational(1) / abs(*lead));
    auto [it, inserted] = tightest.try_emplace(row.coeffs, row);
    if (!inserted && row.rhs < it->second.rhs) it->second = row;
  }
  rows.clear();
  rows.reserve(tightest.size());
  for (auto& [key, row] : tightest) rows.push_back(std::move(row));
  return std::nullopt;
}

struct Elimination {
  bool feasible = true;
  std::vector<Rational> farkas;
  /// levels[k] holds the system over variables 0..k (levels[0] is over x0
  /// alone); used for back-substitution.
  std::vector<std::vector<Row>> levels;
};

Elimination eliminate_all(std::vector<Row> rows, int variables) {
  Elimination out;
  out.levels.resize(static_cast<std::size_t>(variables));
  if (auto bad = normalize_dedup(rows)) {
    out.feasible = false;
    out.farkas = std::move(bad->mult);
    return out;
  }
  for (int var = variables - 1; var >= 0; --var) {
    out.levels[static_cast<std::size_t>(var)] = rows;
    std::vector<Row> next;
    std::vector<const Row*> uppers, lowers;
    for (const Row& row : rows) {
      const Rational& c = row.coeffs[static_cast<std::size_t>(var)];
      if (c > 0) {
        uppers.push_back(&row);
      } else if (c < 0) {
        lowers.push_back(&row);
      } else {
        next.push_back(row);
      }
    }
    for (const Row* u : uppers) {
      for (const Row* l : lowers) next.push_back(combine(*u, *l, var));
    }
    if (auto bad = normalize_dedup(next)) {
      out.feasible = false;
      out.farkas = std::move(bad->mult);
      return out;
    }
    rows = std::move(next);
  }
  return out;
}

}  // namespace

LinearFeasibilityProblem::LinearFeasibilityProblem(int variables) : variables_(variables) {
  if (variables < 0) throw InputError("negative variable count");
}

void LinearFeasibilityProblem::add(LinearConstraint constraint) {
  if (static_cast<int>(constraint.coeffs.size()) != variables_) {
    throw InputError("constraint arity does not match the variable count");
  }
  constraints_.push_back(std::move(constraint));
}

void LinearFeasibilityProblem::add(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
  add(LinearConstraint{std::move(coeffs), rel, std::move(rhs)});
}

namespace {

std::vector<Row> to_rows(const std::vector<LinearConstraint>& constraints, int variables) {
  std::vector<Row> rows;
  const std::size_t m = constraints.size();
  for (std::size_t i = 0; i < m; ++i) {
    const LinearConstraint& c = constraints[i];
    Row forward{c.coeffs, c.rhs, std::vector<Rational>(m)};
    forward.mult[i] = 1;
    Row backward{c.coeffs, c.rhs, std::vector<Rational>(m)};
    backward.mult[i] = -1;
    for (std::size_t j = 0; j < static_cast<std::size_t>(variables); ++j) {
      backward.coeffs[j] = -backward.coeffs[j];
    }
    backward.rhs = -backward.rhs;
    switch (c.rel) {
      case Relation::LessEq:
        rows.push_back(std::move(forward));
        break;
      case Relation::GreaterEq:
        rows.push_back(std::move(backward));
        break;
      case Relation::Equal:
        rows.push_back(std::move(forward));
        rows.push_back(std::move(backward));
        break;
    }
  }
  return rows;
}

}  // namespace

LinearFeasibilityProblem::Feasibility LinearFeasibilityProblem::check() const {
  const Elimination result = eliminate_all(to_rows(constraints_, variables_), variables_);
  Feasibility out;
  out.feasible = result.feasible;
  if (!result.feasible) out.farkas = result.farkas;
  return out;
}

std::optional<std::vector<Rational>> LinearFeasibilityProblem::feasible_point() const {
  const Elimination result = eliminate_all(to_rows(constraints_, variables_), variables_);
  if (!result.feasible) return std::nullopt;

  std::vector<Rational> point(static_cast<std::size_t>(variables_));
  for (int var = 0; var < variables_; ++var) {
    std::optional<Rational> lower, upper;
    for (const Row& row : result.levels[static_cast<std::size_t>(var)]) {
      const Rational& c = row.coeffs[static_cast<std::size_t>(var)];
      if (c == 0) continue;
      Rational bound = row.rhs;
      for (int j = 0; j < var; ++j) {
        bound -= row.coeffs[static_cast<std::size_t>(j)] * point[static_cast<std::size_t>(j)];
      }
      bound /= c;
      if (c > 0) {
        upper = upper ? std::min(*upper, bound) : bound;
      } else {
        lower = lower ? std::max(*lower, bound) : bound;
      }
    }
    Rational value(0);
    if (lower) {
      value = *lower;
    } else if (upper) {
      value = std::min(Rational(0), *upper);
    }
    point[static_cast<std::size_t>(var)] = value;
  }
  return point;
}

LinearFeasibilityProblem::Optimum LinearFeasibilityProblem::minimize(
    const std::vector<Rational>& objective) const {
  if (static_cast<int>(objective.size()) != variables_) {
    throw InputError("objective arity does not match the variable count");
  }
  // Extended system over (x, t) with t pinned to the objective value; the
  // infimum is the best lower bound on t after eliminating x.
  const int ext = variables_ + 1;
  std::vector<Row> rows = to_rows(constraints_, variables_);
  for (Row& row : rows) row.coeffs.push_back(Rational(0));
  {
    Row tie_up{objective, Rational(0), {}};
    tie_up.coeffs.push_back(Rational(-1));  // objective . x - t <= 0
    Row tie_down;
    tie_down.rhs = 0;
    for (const Rational& c : objective) tie_down.coeffs.push_back(-c);
    tie_down.coeffs.push_back(Rational(1));  // t - objective . x <= 0
    const std::size_t m = constraints_.size();
    tie_up.mult.assign(m, Rational(0));
    tie_down.mult.assign(m, Rational(0));
    rows.push_back(std::move(tie_up));
    rows.push_back(std::move(tie_down));
  }

  Optimum out;
  if (auto bad = normalize_dedup(rows)) return out;  // infeasible
  for (int var = 0; var < variables_; ++var) {
    std::vector<Row> next;
    std::vector<const Row*> uppers, lowers;
    for (const Row& row : rows) {
      const Rational& c = row.coeffs[static_cast<std::size_t>(var)];
      if (c > 0) {
        uppers.push_back(&row);
      } else if (c < 0) {
        lowers.push_back(&row);
      } else {
        next.push_back(row);
      }
    }
    for (const Row* u : uppers) {
      for (const Row* l : lowers) next.push_back(combine(*u, *l, var));
    }
    if (auto bad = normalize_dedup(next)) return out;  // infeasible
    rows = std::move(next);
  }

  out.feasible = true;
  std::optional<Rational> best;
  for (const Row& row : rows) {
    const Rational& c = row.coeffs[static_cast<std::size_t>(ext - 1)];
    if (c < 0) {
      const Rational bound = row.rhs / c;  // t >= bound
      best = best ? std::max(*best, bound) : bound;
    }
  }
  if (best) {
    out.bounded = true;
    out.value = *best;
  }
  return out;
}

std::optional<std::vector<Rational>> LinearFeasibilityProblem::lexicographic_minimum() const {
  LinearFeasibilityProblem narrowed = *this;
  std::vector<Rational> point;
  point.reserve(static_cast<std::size_t>(variables_));
  for (int var = 0; var < variables_; ++var) {
    std::vector<Rational> objective(static_cast<std::size_t>(variables_));
    objective[static_cast<std::size_t>(var)] = 1;
    const Optimum opt = narrowed.minimize(objective);
    if (!opt.feasible) return std::nullopt;
    if (!opt.bounded) {
      throw PreconditionError("lexicographic minimum: variable " + std::to_string(var) +
                              " is unbounded below");
    }
    point.push_back(opt.value);
    narrowed.add(objective, Relation::Equal, opt.value);
  }
  return point;
}

}  // namespace frs
