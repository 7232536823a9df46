#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cantorval {

// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs.
// Deliberately small: only the operations the exact geometry engine and
// the rational type actually need.
class BigInt {
public:
  BigInt() = default;
  BigInt(std::int64_t v);

  static BigInt from_string(std::string_view s);
  static BigInt pow(std::uint32_t base, std::uint32_t exp);
  static BigInt gcd(BigInt a, BigInt b);

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return negative_; }
  bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

  bool fits_int64() const;
  std::int64_t to_int64() const;
  std::string to_string() const;

  BigInt abs() const;
  BigInt operator-() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  // Truncated division, |r| < |b|, r carries the dividend's sign.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  // In-place magnitude division by a small divisor; returns the remainder
  // of the magnitude. Sign is preserved (used for p-adic canonicalization).
  std::uint32_t divmod_u32(std::uint32_t d);
  bool divisible_by_u32(std::uint32_t d) const;

  std::strong_ordering operator<=>(const BigInt& o) const;
  bool operator==(const BigInt& o) const = default;

private:
  std::vector<std::uint32_t> limbs_; // little-endian, no trailing zero limbs
  bool negative_ = false;            // false when zero

  void normalize();
  std::size_t bit_length() const;
  bool bit(std::size_t i) const;
  void set_bit(std::size_t i);
  void shl1_or(bool low_bit);

  static int cmp_mag(const BigInt& a, const BigInt& b);
  static BigInt add_mag(const BigInt& a, const BigInt& b);
  static BigInt sub_mag(const BigInt& a, const BigInt& b); // requires |a| >= |b|
};

} // namespace cantorval
