#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frs/ideals.hpp"
#include "frs/linear_feasibility.hpp"
#include "frs/operators.hpp"

namespace frs {

/// A linear subspace whose span is closed under join and meet, carrying the
/// sampled confirmation of that closure. Built through verified(), which
/// checks basis combinations up to a depth plus random span samples and
/// refuses non-sublattices.
struct SublatticeSubspace {
  GradedSpace ambient;
  std::vector<Vec> basis;
  long closure_checks = 0;  // how many join/meet memberships were confirmed

  static SublatticeSubspace verified(GradedSpace space, std::vector<Vec> basis, int depth = 2,
                                     long samples = 50, std::uint64_t seed = 21);

  bool contains(const Vec& x) const;
};

/// Null ideal of a positive operator: the vectors whose modulus maps to
/// zero, i.e. the zero columns. Asserted to be a band (it equals its double
/// disjoint complement).
CoordinateIdeal null_ideal(const RationalOperator& op);

struct OrderContinuityReport {
  long trials = 0;
  bool pass = false;
  /// The two continuity labels of the source material are transposed
  /// relative to common usage; both name the same check on this family.
  std::string note;
};

/// Order continuity of a positive operator on decreasing-to-zero geometric
/// sequences: the image is dominated by the explicit decreasing sequence
/// (T drift) * r^k. Every positive operator on the finite model passes.
OrderContinuityReport order_continuity_check(const RationalOperator& op, long trials,
                                             std::uint64_t seed);

/// Dominated extension value theta(x) = inf { Tz : z in M, z >= x },
/// computed componentwise by exact linear programs over the basis
/// coefficients. Agrees with T on M; sublinear and join-preserving on the
/// whole space. Preconditions: T restricted to M is a lattice homomorphism
/// and M majorizes x (otherwise the infeasibility certificate is reported).
Vec theta_extension(const SublatticeSubspace& m, const RationalOperator& op, const Vec& x);

/// Factorization through a homomorphism: given Q a homomorphism, S and T
/// positive with T <= S o Q, produces S1 with S1 o Q = T and 0 <= S1 <= S,
/// choosing the row-major lexicographically minimal feasible matrix.
/// A feasible S1 always exists under the preconditions; infeasibility is a
/// bug signal and raises logic_error.
RationalOperator factorize(const RationalOperator& q, const RationalOperator& s,
                           const RationalOperator& t);

}  // namespace frs
