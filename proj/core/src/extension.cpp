#include "frs/extension.hpp"

#include <algorithm>

#include "frs/linalg.hpp"

namespace frs {

SublatticeSubspace SublatticeSubspace::verified(GradedSpace space, std::vector<Vec> basis,
                                                int depth, long samples, std::uint64_t seed) {
  SublatticeSubspace m;
  m.ambient = space;
  for (const Vec& b : basis) {
    if (b.dim() != space.dim) throw InputError("sublattice basis dimension mismatch");
  }
  m.basis = std::move(basis);

  const auto confirm = [&m](const Vec& candidate) {
    if (!in_span(m.basis, candidate)) {
      throw InputError("span is not a sublattice: " + candidate.to_string() +
                       " escapes it");
    }
    ++m.closure_checks;
  };

  std::vector<Vec> layer = m.basis;
  for (int d = 0; d < depth; ++d) {
    std::vector<Vec> next;
    for (std::size_t i = 0; i < layer.size(); ++i) {
      for (std::size_t j = i + 1; j < layer.size(); ++j) {
        for (const Vec& candidate :
             {cwise_max(layer[i], layer[j]), cwise_min(layer[i], layer[j])}) {
          confirm(candidate);
          next.push_back(candidate);
        }
      }
    }
    layer.insert(layer.end(), next.begin(), next.end());
    if (layer.size() > 64) layer.resize(64);  // keep the combination sweep bounded
  }

  Rng rng(seed);
  const int k = static_cast<int>(m.basis.size());
  for (long t = 0; t < samples && k > 0; ++t) {
    Vec u = Vec::zero(space.dim);
    Vec v = Vec::zero(space.dim);
    for (const Vec& b : m.basis) {
      u = u + rng.next_rational(10, 5) * b;
      v = v + rng.next_rational(10, 5) * b;
    }
    confirm(cwise_max(u, v));
    confirm(cwise_min(u, v));
  }
  return m;
}

bool SublatticeSubspace::contains(const Vec& x) const {
  return in_span(basis, x);
}

CoordinateIdeal null_ideal(const RationalOperator& op) {
  for (int r = 0; r < op.rows(); ++r) {
    for (int c = 0; c < op.cols(); ++c) {
      if (op.at(r, c) < 0) {
        throw PreconditionError("null_ideal requires a positive operator");
      }
    }
  }
  std::vector<int> zero_cols;
  for (int c = 0; c < op.cols(); ++c) {
    if (op.column_is_zero(c)) zero_cols.push_back(c);
  }
  CoordinateIdeal ideal(op.domain, std::move(zero_cols));
  if (disjoint_complement(disjoint_complement(ideal)) != ideal) {
    throw std::logic_error("null ideal is not a band");
  }
  return ideal;
}

OrderContinuityReport order_continuity_check(const RationalOperator& op, long trials,
                                             std::uint64_t seed) {
  for (int r = 0; r < op.rows(); ++r) {
    for (int c = 0; c < op.cols(); ++c) {
      if (op.at(r, c) < 0) {
        throw PreconditionError("order_continuity_check requires a positive operator");
      }
    }
  }
  Rng rng(seed);
  OrderContinuityReport report;
  report.trials = trials;
  report.pass = true;
  report.note = "labels 4.2/4.3 are transposed in the source; both run this check";

  const std::vector<Rational> ratios = {Rational(1, 2), Rational(1, 3), Rational(2, 5),
                                        Rational(3, 4)};
  for (long t = 0; t < trials && report.pass; ++t) {
    const Vec drift = random_nonneg_vec(rng, op.cols());
    const Rational ratio = rng.pick(ratios);
    const Vec image_drift = op.apply(drift);
    for (long k = 0; k < 6; ++k) {
      const Rational rk = rational_pow(ratio, static_cast<unsigned long>(k));
      const Vec x_k = rk * drift;
      const Vec dominator = rk * image_drift;
      // The image term is dominated exactly, and the dominating sequence
      // decreases to zero.
      if (abs_vec(op.apply(x_k)) != dominator) report.pass = false;
      if (!cwise_leq(ratio * dominator, dominator)) report.pass = false;
      if (!cwise_leq(Vec::zero(op.rows()), dominator)) report.pass = false;
    }
  }
  return report;
}

namespace {

/// The domination constraints sum_j c_j basis_j >= x over the coefficients.
LinearFeasibilityProblem domination_problem(const SublatticeSubspace& m, const Vec& x) {
  const int k = static_cast<int>(m.basis.size());
  LinearFeasibilityProblem lp(k);
  for (int row = 0; row < m.ambient.dim; ++row) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) coeffs[static_cast<std::size_t>(j)] = m.basis[static_cast<std::size_t>(j)][row];
    lp.add(std::move(coeffs), Relation::GreaterEq, x[row]);
  }
  return lp;
}

Vec from_coefficients(const SublatticeSubspace& m, const std::vector<Rational>& coeffs) {
  Vec z = Vec::zero(m.ambient.dim);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    z = z + coeffs[j] * m.basis[j];
  }
  return z;
}

void require_hom_on_sublattice(const SublatticeSubspace& m, const RationalOperator& op) {
  if (op.cols() != m.ambient.dim) {
    throw PreconditionError("theta_extension: operator domain mismatch");
  }
  Rng rng(31);
  for (int t = 0; t < 24; ++t) {
    Vec u = Vec::zero(m.ambient.dim);
    Vec v = Vec::zero(m.ambient.dim);
    for (const Vec& b : m.basis) {
      u = u + rng.next_rational(8, 4) * b;
      v = v + rng.next_rational(8, 4) * b;
    }
    if (op.apply(cwise_max(u, v)) != cwise_max(op.apply(u), op.apply(v))) {
      throw PreconditionError("theta_extension: operator is not a lattice homomorphism on M");
    }
  }
  for (std::size_t i = 0; i < m.basis.size(); ++i) {
    for (std::size_t j = 0; j < m.basis.size(); ++j) {
      const Vec& u = m.basis[i];
      const Vec& v = m.basis[j];
      if (op.apply(cwise_max(u, v)) != cwise_max(op.apply(u), op.apply(v))) {
        throw PreconditionError("theta_extension: operator is not a lattice homomorphism on M");
      }
    }
  }
}

std::string format_farkas(const std::vector<Rational>& mult) {
  std::string out = "[";
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_rational(mult[i]);
  }
  return out + "]";
}

}  // namespace

Vec theta_extension(const SublatticeSubspace& m, const RationalOperator& op, const Vec& x) {
  if (x.dim() != m.ambient.dim) throw InputError("theta_extension: dimension mismatch");
  require_hom_on_sublattice(m, op);

  const LinearFeasibilityProblem lp = domination_problem(m, x);
  const auto feasibility = lp.check();
  if (!feasibility.feasible) {
    throw PreconditionError(
        "theta_extension: M does not majorize x = " + x.to_string() +
        "; infeasibility certificate " + format_farkas(feasibility.farkas));
  }

  const int k = static_cast<int>(m.basis.size());
  Vec theta = Vec::zero(op.rows());
  for (int r = 0; r < op.rows(); ++r) {
    std::vector<Rational> objective(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
      objective[static_cast<std::size_t>(j)] = op.apply(m.basis[static_cast<std::size_t>(j)])[r];
    }
    const auto opt = lp.minimize(objective);
    if (!opt.feasible) {
      throw std::logic_error("theta_extension: feasibility lost during optimization");
    }
    if (!opt.bounded) {
      throw std::logic_error("theta_extension: objective unbounded below; T cannot be a "
                             "positive homomorphism on a majorizing M");
    }
    theta[r] = opt.value;
  }

  // Extension property: on M the infimum is attained at x itself.
  if (span_coefficients(m.basis, x).has_value()) {
    if (theta != op.apply(x)) {
      throw std::logic_error("theta_extension: value differs from T on M");
    }
  }

  // Downward directedness of the feasible set, sampled: two canonical
  // feasible points (the second from the reversed basis ordering) must
  // admit their meet inside M and above x.
  if (const auto c1 = lp.feasible_point()) {
    const Vec z1 = from_coefficients(m, *c1);
    SublatticeSubspace reversed = m;
    std::reverse(reversed.basis.begin(), reversed.basis.end());
    const auto c2 = domination_problem(reversed, x).feasible_point();
    const Vec z2 = c2 ? from_coefficients(reversed, *c2) : z1;
    for (const Vec& z : {z1, z2}) {
      if (!cwise_leq(x, z)) {
        throw std::logic_error("theta_extension: feasible point fails domination");
      }
    }
    const Vec meet = cwise_min(z1, z2);
    if (!m.contains(meet) || !cwise_leq(x, meet)) {
      throw std::logic_error("theta_extension: feasible set is not downward directed");
    }
  }

  return theta;
}

RationalOperator factorize(const RationalOperator& q, const RationalOperator& s,
                           const RationalOperator& t) {
  if (!hom_structure(q)) {
    throw PreconditionError("factorize: Q must be a Riesz homomorphism");
  }
  const auto entrywise_nonneg = [](const RationalOperator& op) {
    for (int r = 0; r < op.rows(); ++r) {
      for (int c = 0; c < op.cols(); ++c) {
        if (op.at(r, c) < 0) return false;
      }
    }
    return true;
  };
  if (!entrywise_nonneg(s)) throw PreconditionError("factorize: S must be positive");
  if (!entrywise_nonneg(t)) throw PreconditionError("factorize: T must be positive");
  if (q.cols() != t.cols() || s.cols() != q.rows() || s.rows() != t.rows()) {
    throw PreconditionError("factorize: operator shapes do not compose");
  }

  const RationalOperator sq = s.compose(q);
  for (int r = 0; r < t.rows(); ++r) {
    for (int c = 0; c < t.cols(); ++c) {
      if (t.at(r, c) > sq.at(r, c)) {
        throw PreconditionError("factorize: T <= S o Q fails at entry (" + std::to_string(r + 1) +
                                "," + std::to_string(c + 1) + "): " +
                                format_rational(t.at(r, c)) + " > " +
                                format_rational(sq.at(r, c)));
      }
    }
  }

  // Well-definedness of T on the range of Q: kernel columns of Q must be
  // killed by T. Implied by positivity and the domination bound.
  for (int c = 0; c < q.cols(); ++c) {
    if (!q.column_is_zero(c)) continue;
    for (int r = 0; r < t.rows(); ++r) {
      if (t.at(r, c) != 0) {
        throw std::logic_error("factorize: T does not vanish on the kernel of Q");
      }
    }
  }

  // Rows decouple: row r of S1 sees only row r of T and of S.
  RationalOperator s1(s.domain, s.codomain);
  for (int r = 0; r < s.rows(); ++r) {
    LinearFeasibilityProblem lp(s.cols());
    for (int c = 0; c < q.cols(); ++c) {
      std::vector<Rational> coeffs(static_cast<std::size_t>(s.cols()));
      for (int h = 0; h < s.cols(); ++h) coeffs[static_cast<std::size_t>(h)] = q.at(h, c);
      lp.add(std::move(coeffs), Relation::Equal, t.at(r, c));
    }
    for (int h = 0; h < s.cols(); ++h) {
      std::vector<Rational> lowered(static_cast<std::size_t>(s.cols()));
      lowered[static_cast<std::size_t>(h)] = 1;
      lp.add(lowered, Relation::GreaterEq, Rational(0));
      lp.add(std::move(lowered), Relation::LessEq, s.at(r, h));
    }
    const auto row = lp.lexicographic_minimum();
    if (!row) {
      throw std::logic_error("factorize: feasible region empty for row " + std::to_string(r + 1) +
                             "; the factorization theorem guarantees a solution");
    }
    for (int h = 0; h < s.cols(); ++h) s1.at(r, h) = (*row)[static_cast<std::size_t>(h)];
  }

  // Re-verify the contract, then the sublinear domination on signed basis
  // vectors (implied by the box bounds, asserted anyway).
  if (s1.compose(q).entries != t.entries) {
    throw std::logic_error("factorize: S1 o Q differs from T");
  }
  for (int r = 0; r < s.rows(); ++r) {
    for (int h = 0; h < s.cols(); ++h) {
      if (s1.at(r, h) < 0 || s1.at(r, h) > s.at(r, h)) {
        throw std::logic_error("factorize: S1 escaped the box 0 <= S1 <= S");
      }
    }
  }
  for (int h = 0; h < s.cols(); ++h) {
    for (const int sign : {1, -1}) {
      const Vec y = Rational(sign) * Vec::unit(s.cols(), h);
      if (!cwise_leq(s1.apply(y), s.apply(positive_part(y)))) {
        throw std::logic_error("factorize: S1(y) <= S(y+) failed on a basis vector");
      }
    }
  }
  return s1;
}

}  // namespace frs
