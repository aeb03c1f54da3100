#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordinal {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction, always normalized: gcd(|num|, den) == 1 and den > 0.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}
  Rational(BigInt num, BigInt den);

  /// Parses "7", "-3/4" or a plain decimal such as "4.0535" exactly.
  static Rational parse(std::string_view text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  double to_double() const;
  std::string to_string() const;  // "n" or "n/d"

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  // Cross-multiplication; denominators are positive so the sign is preserved.
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

}  // namespace ordinal
