#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "frs/rational.hpp"

namespace frs {

/// Rational coordinate vector. Dimension is fixed at construction.
struct Vec {
  std::vector<Rational> coords;

  Vec() = default;
  explicit Vec(std::vector<Rational> c) : coords(std::move(c)) {}
  Vec(std::initializer_list<Rational> c) : coords(c) {}

  static Vec zero(int dim) { return Vec(std::vector<Rational>(static_cast<std::size_t>(dim))); }
  static Vec unit(int dim, int index);

  int dim() const { return static_cast<int>(coords.size()); }
  const Rational& operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return coords[static_cast<std::size_t>(i)]; }

  bool operator==(const Vec& other) const = default;

  bool is_zero() const;
  /// Indices of nonzero coordinates, ascending.
  std::vector<int> support() const;

  std::string to_string() const;
};

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Rational& s, const Vec& a);

Vec cwise_max(const Vec& a, const Vec& b);
Vec cwise_min(const Vec& a, const Vec& b);
Vec positive_part(const Vec& a);
Vec negative_part(const Vec& a);
Vec abs_vec(const Vec& a);

/// Componentwise a <= b (equality allowed).
bool cwise_leq(const Vec& a, const Vec& b);

void require_same_dim(const Vec& a, const Vec& b, const char* where);

}  // namespace frs
