#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frs/rational.hpp"

namespace frs {

/// Bounded sequence of the shape c0 + c1/n + c2/n^2 with finitely many
/// patched positions. The smallest family containing the constant-one
/// sequence, the harmonic sequence and the inverse-square sequence on which
/// pointwise comparison and principal-ideal membership stay decidable.
/// Terms are normalized on construction: patch entries agreeing with the
/// closed form are dropped, so structural equality is pointwise equality.
struct SeqTerm {
  Rational c0;
  Rational c1;
  Rational c2;
  std::map<long, Rational> patch;  // position (>= 1) -> value

  SeqTerm() = default;
  SeqTerm(Rational a0, Rational a1, Rational a2, std::map<long, Rational> overrides = {});

  static SeqTerm constant(Rational c) { return SeqTerm(std::move(c), 0, 0); }
  /// 1/n, the sequence y of the running example.
  static SeqTerm harmonic() { return SeqTerm(0, 1, 0); }
  /// 1/n^2, the generator x of the principal ideal A.
  static SeqTerm inverse_square() { return SeqTerm(0, 0, 1); }

  Rational eval(long n) const;
  bool operator==(const SeqTerm& other) const = default;

  SeqTerm operator+(const SeqTerm& other) const;
  SeqTerm operator-(const SeqTerm& other) const;
  SeqTerm scaled(const Rational& s) const;

  std::string to_string() const;
};

/// First position where f(n) > g(n), if any. Decided symbolically: the sign
/// of the closed-form difference is a rational quadratic in n with at most
/// two sign changes, plus the finitely many patched positions.
std::optional<long> first_violation(const SeqTerm& f, const SeqTerm& g);

/// Grade of the pair in the sequence model: 1 when identical, 2/3 when
/// f(n) <= g(n) at every position n >= 1, 0 otherwise.
Rational eventual_grade(const SeqTerm& f, const SeqTerm& g);

struct PrincipalMembership {
  bool member = false;
  std::optional<Rational> lambda;  // minimal multiplier when member
};

/// Membership of f in the principal ideal generated by the inverse-square
/// sequence: |f(n)| <= lambda/n^2 for some lambda, which holds exactly when
/// the closed form has c0 = c1 = 0. Only the inverse-square generator is
/// supported.
PrincipalMembership in_principal_ideal(const SeqTerm& f, const SeqTerm& generator);

struct NonArchRow {
  long k = 0;
  Rational grade;            // the certified quotient grade, 2/3 for every k
  Rational lambda;           // ideal-membership multiplier of the correction
  long patch_size = 0;       // support of the correction
  bool membership_ok = false;
  bool domination_ok = false;
  bool classes_distinct = false;
};

struct NonArchDemo {
  std::vector<NonArchRow> rows;
  bool y_nonzero_in_quotient = false;
  bool verdict_not_archimedean = false;
};

/// Certificate table for the non-Archimedean quotient: for every k the
/// correction a_k(n) = max(0, 1/n - 1/k) lies in the ideal (with its minimal
/// multiplier) and y - a_k is dominated pointwise by e/k, so the class of y
/// sits below every e/k while staying nonzero. Certificate failures are
/// impossible and raise logic_error.
NonArchDemo nonarchimedean_demo(long k_max);

}  // namespace frs
