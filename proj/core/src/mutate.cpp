#include "frs/mutate.hpp"

#include <algorithm>

#include "frs/graded_space.hpp"
#include "frs/ideals.hpp"
#include "frs/linalg.hpp"
#include "frs/operators.hpp"
#include "frs/quotient.hpp"

namespace frs {

MutationTarget mutation_target_from_name(const std::string& name) {
  if (name == "foset") return MutationTarget::Foset;
  if (name == "hom") return MutationTarget::Hom;
  if (name == "ideal") return MutationTarget::Ideal;
  if (name == "quotient") return MutationTarget::Quotient;
  throw InputError("unknown mutation target \"" + name + "\" (foset|hom|ideal|quotient)");
}

const char* mutation_target_name(MutationTarget target) {
  switch (target) {
    case MutationTarget::Foset: return "foset";
    case MutationTarget::Hom: return "hom";
    case MutationTarget::Ideal: return "ideal";
    case MutationTarget::Quotient: return "quotient";
  }
  return "?";
}

FuzzyOrderMatrix random_valid_foset(Rng& rng, int size) {
  FuzzyOrderMatrix m(size);
  const std::vector<Rational> palette = {Rational(1, 5), Rational(1, 3), Rational(3, 5),
                                         Rational(2, 3), Rational(4, 5), Rational(1)};
  for (int x = 0; x < size; ++x) m.at(x, x) = 1;
  // Edges only from lower to higher index, so antisymmetry holds by
  // construction and the closure below cannot break it.
  for (int x = 0; x < size; ++x) {
    for (int y = x + 1; y < size; ++y) {
      if (rng.next_int(0, 2) == 0) m.at(x, y) = rng.pick(palette);
    }
  }
  // Max-min transitive closure.
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      for (int z = 0; z < size; ++z) {
        m.at(x, z) = std::max(m.at(x, z), std::min(m.at(x, y), m.at(y, z)));
      }
    }
  }
  return m;
}

namespace {

const std::vector<Rational>& mutation_palette() {
  static const std::vector<Rational> palette = {
      Rational(0),    Rational(1, 5), Rational(1, 3), Rational(1, 2), Rational(3, 5),
      Rational(2, 3), Rational(4, 5), Rational(9, 10), Rational(1)};
  return palette;
}

Rational different_grade(Rng& rng, const Rational& current) {
  for (;;) {
    const Rational candidate = rng.pick(mutation_palette());
    if (candidate != current) return candidate;
  }
}

/// Re-verify a reported axiom violation by direct arithmetic, independent of
/// the validator's scan.
bool violation_sound(const FuzzyOrderMatrix& m, const AxiomViolation& v) {
  switch (v.axiom) {
    case FosetAxiom::Reflexivity:
      return m.at(v.x, v.x) != 1;
    case FosetAxiom::Antisymmetry:
      return v.x != v.y && m.at(v.x, v.y) + m.at(v.y, v.x) > 1;
    case FosetAxiom::Transitivity:
      return m.at(v.x, v.z) < std::min(m.at(v.x, v.y), m.at(v.y, v.z));
  }
  return false;
}

struct TrialResult {
  bool detected = false;
  bool still_valid = false;
  std::string failure;
};

TrialResult mutate_foset_once(Rng& rng) {
  TrialResult out;
  FuzzyOrderMatrix m = random_valid_foset(rng, static_cast<int>(rng.next_int(3, 7)));
  const int x = static_cast<int>(rng.next_int(0, m.size - 1));
  const int y = static_cast<int>(rng.next_int(0, m.size - 1));
  m.at(x, y) = different_grade(rng, m.at(x, y));

  const AxiomReport report = validate_fuzzy_order(m);
  if (report.valid()) {
    out.still_valid = true;
    return out;
  }
  for (const AxiomViolation& v : report.violations) {
    if (!violation_sound(m, v)) {
      out.failure = std::string("unsound ") + axiom_name(v.axiom) + " witness";
      return out;
    }
  }
  out.detected = true;
  return out;
}

TrialResult mutate_hom_once(Rng& rng) {
  TrialResult out;
  const int rows = static_cast<int>(rng.next_int(2, 5));
  const int cols = static_cast<int>(rng.next_int(2, 5));
  RationalOperator op = random_hom(rng, rows, cols);
  const int r = static_cast<int>(rng.next_int(0, rows - 1));
  const int c = static_cast<int>(rng.next_int(0, cols - 1));
  Rational value = rng.next_rational(10, 4);
  while (value == op.at(r, c)) value = rng.next_rational(10, 4);
  op.at(r, c) = value;

  // classify_operator raises logic_error if the two oracles split.
  const ClassifyReport report = classify_operator(op, 128, rng.next_u64());
  if (report.riesz_hom) {
    out.still_valid = true;
    return out;
  }
  if (report.join_counterexample) {
    const auto& [a, b] = *report.join_counterexample;
    if (op.apply(cwise_max(a, b)) == cwise_max(op.apply(a), op.apply(b))) {
      out.failure = "semantic counterexample does not violate the join equation";
      return out;
    }
  }
  out.detected = true;
  return out;
}

TrialResult mutate_ideal_once(Rng& rng) {
  TrialResult out;
  const int dim = static_cast<int>(rng.next_int(2, 6));
  const GradedSpace space = GradedSpace::with_default_grade(dim);
  std::vector<Vec> basis;
  for (int j = 0; j < dim; ++j) {
    if (rng.next_bool()) {
      basis.push_back(Rational(rng.next_int(1, 5)) * Vec::unit(dim, j));
    }
  }
  if (basis.empty()) basis.push_back(Vec::unit(dim, 0));

  const int which = static_cast<int>(rng.next_int(0, static_cast<int>(basis.size()) - 1));
  const int coord = static_cast<int>(rng.next_int(0, dim - 1));
  Vec& target = basis[static_cast<std::size_t>(which)];
  Rational value = rng.next_rational(6, 3);
  while (value == target[coord]) value = rng.next_rational(6, 3);
  target[coord] = value;

  const SubspaceSpec spec{space, basis};
  const SolidityReport report = is_solid(spec);
  if (report.solid) {
    out.still_valid = true;
    return out;
  }
  if (!report.witness) {
    out.failure = "solidity failure without witness";
    return out;
  }
  const auto& [x, y] = *report.witness;
  if (!cwise_leq(abs_vec(x), abs_vec(y)) || !in_span(basis, y) || in_span(basis, x)) {
    out.failure = "unsound solidity witness";
    return out;
  }
  out.detected = true;
  return out;
}

TrialResult mutate_quotient_once(Rng& rng) {
  TrialResult out;
  const int dim = static_cast<int>(rng.next_int(3, 6));
  const GradedSpace space = GradedSpace::with_default_grade(dim);
  std::vector<int> coords;
  for (int j = 0; j < dim; ++j) {
    if (rng.next_bool()) coords.push_back(j);
  }
  if (static_cast<int>(coords.size()) == dim) coords.pop_back();
  const QuotientSpace q(space, CoordinateIdeal(space, coords));

  std::vector<QClass> classes;
  classes.push_back(project(q, Vec::zero(dim)));
  for (int attempt = 0; attempt < 16 && classes.size() < 4; ++attempt) {
    const QClass c = project(q, random_vec(rng, dim));
    if (std::find(classes.begin(), classes.end(), c) == classes.end()) classes.push_back(c);
  }
  const int n = static_cast<int>(classes.size());
  FuzzyOrderMatrix table(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table.at(i, j) = quotient_grade(q, classes[static_cast<std::size_t>(i)],
                                      classes[static_cast<std::size_t>(j)]);
    }
  }

  const int i = static_cast<int>(rng.next_int(0, n - 1));
  const int j = static_cast<int>(rng.next_int(0, n - 1));
  table.at(i, j) = different_grade(rng, table.at(i, j));

  // A mutated table either breaks the order axioms or disagrees with the
  // recomputed grade; both count as detection, and the disagreement is
  // re-verified positionally.
  const bool axioms_broken = !validate_fuzzy_order(table).valid();
  const bool grade_mismatch = table.at(i, j) != quotient_grade(q, classes[static_cast<std::size_t>(i)],
                                                               classes[static_cast<std::size_t>(j)]);
  if (!axioms_broken && !grade_mismatch) {
    out.failure = "mutated grade table evaded both checkers";
    return out;
  }
  out.detected = true;
  return out;
}

}  // namespace

MutationOutcome run_mutation_harness(MutationTarget target, long trials, std::uint64_t seed,
                                     long retry_budget) {
  Rng rng(seed);
  MutationOutcome outcome;
  outcome.trials = trials;
  for (long t = 0; t < trials; ++t) {
    bool settled = false;
    for (long attempt = 0; attempt < retry_budget; ++attempt) {
      TrialResult result;
      switch (target) {
        case MutationTarget::Foset: result = mutate_foset_once(rng); break;
        case MutationTarget::Hom: result = mutate_hom_once(rng); break;
        case MutationTarget::Ideal: result = mutate_ideal_once(rng); break;
        case MutationTarget::Quotient: result = mutate_quotient_once(rng); break;
      }
      if (!result.failure.empty()) {
        outcome.failures.push_back("trial " + std::to_string(t) + ": " + result.failure);
        settled = true;
        break;
      }
      if (result.still_valid) {
        ++outcome.rerolls;
        continue;
      }
      ++outcome.detected;
      settled = true;
      break;
    }
    if (!settled) {
      outcome.failures.push_back("trial " + std::to_string(t) + ": retry budget exhausted");
    }
  }
  return outcome;
}

}  // namespace frs
