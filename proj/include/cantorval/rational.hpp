#pragma once

#include "cantorval/bigint.hpp"

#include <compare>
#include <cstdint>
#include <string>

namespace cantorval {

// Exact fraction of BigInts. Always reduced, denominator always positive.
// Comparisons are by cross-multiplication; there is no floating point
// anywhere in the library.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t v) : num_(v), den_(1) {}
  Rational(std::int64_t num, std::int64_t den) : Rational(BigInt{num}, BigInt{den}) {}
  Rational(BigInt num, BigInt den);

  // num / base^depth
  static Rational padic(BigInt num, int depth, std::uint32_t base);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == BigInt{1}; }
  std::string to_string() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);

  std::strong_ordering operator<=>(const Rational& o) const;
  bool operator==(const Rational& o) const = default;

  // Nearest integer to value*scale, ties rounded away from zero.
  BigInt round_scaled(std::int64_t scale) const;

private:
  BigInt num_;
  BigInt den_; // > 0
  void reduce();
};

} // namespace cantorval
