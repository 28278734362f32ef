#include "frs/vec.hpp"

#include <algorithm>

namespace frs {

Vec Vec::unit(int dim, int index) {
  Vec e = zero(dim);
  e[index] = 1;
  return e;
}

bool Vec::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c == 0; });
}

std::vector<int> Vec::support() const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i) {
    if (coords[static_cast<std::size_t>(i)] != 0) out.push_back(i);
  }
  return out;
}

std::string Vec::to_string() const {
  std::string out = "(";
  for (int i = 0; i < dim(); ++i) {
    if (i > 0) out += ", ";
    out += format_rational((*this)[i]);
  }
  out += ")";
  return out;
}

void require_same_dim(const Vec& a, const Vec& b, const char* where) {
  if (a.dim() != b.dim()) {
    throw InputError(std::string(where) + ": dimension mismatch (" + std::to_string(a.dim()) +
                     " vs " + std::to_string(b.dim()) + ")");
  }
}

Vec operator+(const Vec& a, const Vec& b) {
  require_same_dim(a, b, "Vec::operator+");
  Vec out = a;
  for (int i = 0; i < a.dim(); ++i) out[i] += b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  require_same_dim(a, b, "Vec::operator-");
  Vec out = a;
  for (int i = 0; i < a.dim(); ++i) out[i] -= b[i];
  return out;
}

Vec operator-(const Vec& a) {
  Vec out = a;
  for (int i = 0; i < a.dim(); ++i) out[i] = -out[i];
  return out;
}

Vec operator*(const Rational& s, const Vec& a) {
  Vec out = a;
  for (int i = 0; i < a.dim(); ++i) out[i] *= s;
  return out;
}

Vec cwise_max(const Vec& a, const Vec& b) {
  require_same_dim(a, b, "cwise_max");
  Vec out = a;
  for (int i = 0; i < a.dim(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Vec cwise_min(const Vec& a, const Vec& b) {
  require_same_dim(a, b, "cwise_min");
  Vec out = a;
  for (int i = 0; i < a.dim(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

Vec positive_part(const Vec& a) { return cwise_max(a, Vec::zero(a.dim())); }

Vec negative_part(const Vec& a) { return cwise_max(-a, Vec::zero(a.dim())); }

Vec abs_vec(const Vec& a) { return cwise_max(a, -a); }

bool cwise_leq(const Vec& a, const Vec& b) {
  require_same_dim(a, b, "cwise_leq");
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

}  // namespace frs
