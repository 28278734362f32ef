#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace frs {

/// Exact rational number. All order grades, vector coordinates and operator
/// entries in this library are of this type; nothing is ever rounded.
/// Expression templates are off so arithmetic results are plain values that
/// compose with std::min/std::max and containers.
using Rational =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::backends::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::cpp_int;

/// Thrown when an input document or argument is malformed.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an operation's stated precondition does not hold.
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// The comparability threshold: a grade g means "holds" exactly when g > 1/2.
inline const Rational& half() {
  static const Rational h(1, 2);
  return h;
}

inline bool in_unit_interval(const Rational& value) {
  return value >= 0 && value <= 1;
}

/// Parses "p/q" or "p" with optional sign. The round trip through
/// format_rational is bit-exact.
Rational parse_rational(std::string_view text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string format_rational(const Rational& value);

Rational rational_pow(const Rational& base, unsigned long exponent);

/// Largest integer <= value.
BigInt rational_floor(const Rational& value);

/// Smallest integer >= value.
BigInt rational_ceil(const Rational& value);

}  // namespace frs
