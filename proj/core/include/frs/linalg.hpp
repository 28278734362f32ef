#pragma once

#include <optional>
#include <vector>

#include "frs/rational.hpp"
#include "frs/vec.hpp"

namespace frs {

/// Dense rational matrix, row major. Just enough exact linear algebra for
/// span membership and rank; no pivoting heuristics are needed at this scale.
struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<Rational>> data;

  RationalMatrix() = default;
  RationalMatrix(int r, int c)
      : rows(r), cols(c),
        data(static_cast<std::size_t>(r), std::vector<Rational>(static_cast<std::size_t>(c))) {}

  const Rational& at(int r, int c) const {
    return data[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  Rational& at(int r, int c) {
    return data[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }

  /// Columns are the given vectors.
  static RationalMatrix from_columns(const std::vector<Vec>& columns, int dim);
};

/// In-place reduced row echelon form; returns the pivot column per row rank.
int reduced_row_echelon(RationalMatrix& m);

int rank(const RationalMatrix& m);

/// Coefficients c with sum_i c_i * basis_i = target, if the target lies in
/// the span.
std::optional<std::vector<Rational>> span_coefficients(const std::vector<Vec>& basis,
                                                       const Vec& target);

bool in_span(const std::vector<Vec>& basis, const Vec& target);

}  // namespace frs
