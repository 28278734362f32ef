#include "frs/rational.hpp"

#include <cctype>

namespace frs {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  const auto slash = rest.find('/');
  std::string_view num_part = rest.substr(0, slash);
  if (!all_digits(num_part)) {
    throw InputError("malformed rational \"" + std::string(text) + "\"");
  }
  BigInt num{std::string(num_part)};
  BigInt den{1};
  if (slash != std::string_view::npos) {
    std::string_view den_part = rest.substr(slash + 1);
    if (!all_digits(den_part)) {
      throw InputError("malformed rational \"" + std::string(text) + "\"");
    }
    den = BigInt{std::string(den_part)};
    if (den == 0) {
      throw InputError("zero denominator in \"" + std::string(text) + "\"");
    }
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_pow(const Rational& base, unsigned long exponent) {
  using boost::multiprecision::pow;
  if (exponent == 0) return Rational(1);
  return Rational(pow(numerator(base), static_cast<unsigned>(exponent)),
                  pow(denominator(base), static_cast<unsigned>(exponent)));
}

BigInt rational_floor(const Rational& value) {
  BigInt q = numerator(value) / denominator(value);
  // Integer division truncates toward zero; shift down for negatives.
  if (value < 0 && q * denominator(value) != numerator(value)) --q;
  return q;
}

BigInt rational_ceil(const Rational& value) {
  return -rational_floor(-value);
}

}  // namespace frs
