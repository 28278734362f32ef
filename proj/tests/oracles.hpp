#pragma once

// Test-only oracles, kept deliberately naive and independent of the library
// code paths they check.

#include <optional>
#include <vector>

#include "frs/foset.hpp"
#include "frs/graded_space.hpp"
#include "frs/vec.hpp"

namespace frs::oracle {

struct AxiomTruth {
  bool reflexive = true;
  bool antisymmetric = true;
  bool transitive = true;
  bool valid() const { return reflexive && antisymmetric && transitive; }
};

/// Literal triple-nested-loop evaluation of the three axioms, no early
/// exits, no witness machinery.
inline AxiomTruth validate_naive(const FuzzyOrderMatrix& m) {
  AxiomTruth truth;
  for (int x = 0; x < m.size; ++x) {
    if (!(m.at(x, x) == 1)) truth.reflexive = false;
  }
  for (int x = 0; x < m.size; ++x) {
    for (int y = 0; y < m.size; ++y) {
      if (x != y && m.at(x, y) + m.at(y, x) > 1) truth.antisymmetric = false;
    }
  }
  for (int x = 0; x < m.size; ++x) {
    for (int z = 0; z < m.size; ++z) {
      Rational best(0);
      for (int y = 0; y < m.size; ++y) {
        best = std::max(best, std::min(m.at(x, y), m.at(y, z)));
      }
      if (m.at(x, z) < best) truth.transitive = false;
    }
  }
  return truth;
}

/// Every element satisfying both supremum conditions; a valid order admits
/// at most one.
inline std::vector<int> sup_candidates(const FuzzyOrderMatrix& m, const std::vector<int>& subset,
                                       ExtremumMode mode) {
  std::vector<int> found;
  for (int z = 0; z < m.size; ++z) {
    const auto grade_from_member = [&](int x, int y) {
      return mode == ExtremumMode::Sup ? m.at(x, y) : m.at(y, x);
    };
    bool is_bound = true;
    for (int x : subset) {
      if (grade_from_member(x, z) <= half()) is_bound = false;
    }
    if (!is_bound) continue;
    bool least = true;
    for (int y = 0; y < m.size; ++y) {
      bool y_bound = true;
      for (int x : subset) {
        if (grade_from_member(x, y) <= half()) y_bound = false;
      }
      if (!y_bound) continue;
      if (grade_from_member(z, y) <= half()) least = false;
    }
    if (least) found.push_back(z);
  }
  return found;
}

/// Classical poset supremum for a crisp relation (grades 0/1): least upper
/// bound by exhaustive scan.
inline std::optional<int> classical_sup(const std::vector<std::vector<bool>>& leq,
                                        const std::vector<int>& subset, bool sup_mode) {
  const int n = static_cast<int>(leq.size());
  const auto le = [&](int a, int b) { return sup_mode ? leq[a][b] : leq[b][a]; };
  std::vector<int> bounds;
  for (int z = 0; z < n; ++z) {
    bool ok = true;
    for (int x : subset) {
      if (!le(x, z)) ok = false;
    }
    if (ok) bounds.push_back(z);
  }
  for (int z : bounds) {
    bool least = true;
    for (int y : bounds) {
      if (!le(z, y)) least = false;
    }
    if (least) return z;
  }
  return std::nullopt;
}

/// Brute-force least stabilization index of x /\ n*y, scanning a horizon
/// beyond which the closed form can no longer move.
inline long stabilization_naive(const Vec& x, const Vec& y, long horizon) {
  const auto term = [&](long n) { return cwise_min(x, Rational(n) * y); };
  long last_change = 1;
  Vec prev = term(1);
  for (long n = 2; n <= horizon; ++n) {
    Vec cur = term(n);
    if (cur != prev) last_change = n;
    prev = std::move(cur);
  }
  return last_change;
}

}  // namespace frs::oracle
