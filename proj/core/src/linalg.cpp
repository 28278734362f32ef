#include "frs/linalg.hpp"

namespace frs {

RationalMatrix RationalMatrix::from_columns(const std::vector<Vec>& columns, int dim) {
  RationalMatrix m(dim, static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols; ++c) {
    const Vec& v = columns[static_cast<std::size_t>(c)];
    if (v.dim() != dim) throw InputError("from_columns: column dimension mismatch");
    for (int r = 0; r < dim; ++r) m.at(r, c) = v[r];
  }
  return m;
}

int reduced_row_echelon(RationalMatrix& m) {
  int pivot_row = 0;
  for (int col = 0; col < m.cols && pivot_row < m.rows; ++col) {
    int found = -1;
    for (int r = pivot_row; r < m.rows; ++r) {
      if (m.at(r, col) != 0) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    std::swap(m.data[static_cast<std::size_t>(found)], m.data[static_cast<std::size_t>(pivot_row)]);
    const Rational inv = Rational(1) / m.at(pivot_row, col);
    for (int c = col; c < m.cols; ++c) m.at(pivot_row, c) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == pivot_row || m.at(r, col) == 0) continue;
      const Rational factor = m.at(r, col);
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= factor * m.at(pivot_row, c);
    }
    ++pivot_row;
  }
  return pivot_row;
}

int rank(const RationalMatrix& m) {
  RationalMatrix copy = m;
  return reduced_row_echelon(copy);
}

std::optional<std::vector<Rational>> span_coefficients(const std::vector<Vec>& basis,
                                                       const Vec& target) {
  const int dim = target.dim();
  const int k = static_cast<int>(basis.size());
  // Augmented system [B | target] solved by elimination.
  RationalMatrix aug(dim, k + 1);
  for (int c = 0; c < k; ++c) {
    const Vec& v = basis[static_cast<std::size_t>(c)];
    if (v.dim() != dim) throw InputError("span_coefficients: basis dimension mismatch");
    for (int r = 0; r < dim; ++r) aug.at(r, c) = v[r];
  }
  for (int r = 0; r < dim; ++r) aug.at(r, k) = target[r];

  reduced_row_echelon(aug);

  std::vector<Rational> coeffs(static_cast<std::size_t>(k));
  for (int r = 0; r < dim; ++r) {
    int pivot = -1;
    for (int c = 0; c < k; ++c) {
      if (aug.at(r, c) != 0) {
        pivot = c;
        break;
      }
    }
    if (pivot < 0) {
      if (aug.at(r, k) != 0) return std::nullopt;  // inconsistent row
      continue;
    }
    coeffs[static_cast<std::size_t>(pivot)] = aug.at(r, k);
  }
  return coeffs;
}

bool in_span(const std::vector<Vec>& basis, const Vec& target) {
  return span_coefficients(basis, target).has_value();
}

}  // namespace frs
