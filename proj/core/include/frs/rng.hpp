#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "frs/rational.hpp"

namespace frs {

/// Deterministic random source. Every randomized verifier takes an explicit
/// seed and draws through this class only, so identical seeds give
/// byte-identical reports on any platform (no std::*_distribution, whose
/// output is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform-ish integer in [lo, hi], inclusive. The modulo bias is
  /// irrelevant for test-case generation and keeps the stream portable.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next_u64() % span);
  }

  bool next_bool() { return (next_u64() & 1) != 0; }

  /// Random exact rational with numerator in [-num_abs_max, num_abs_max] and
  /// denominator in [1, den_max].
  Rational next_rational(std::int64_t num_abs_max = 100, std::int64_t den_max = 20) {
    return Rational(next_int(-num_abs_max, num_abs_max), next_int(1, den_max));
  }

  Rational next_nonneg_rational(std::int64_t num_max = 100, std::int64_t den_max = 20) {
    return Rational(next_int(0, num_max), next_int(1, den_max));
  }

  /// Random rational in [0, 1].
  Rational next_unit_rational(std::int64_t den_max = 20) {
    const std::int64_t den = next_int(1, den_max);
    return Rational(next_int(0, den), den);
  }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(next_int(0, static_cast<std::int64_t>(items.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace frs
