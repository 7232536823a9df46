#include "cantorval/bigint.hpp"

#include "cantorval/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace cantorval {

namespace {
constexpr std::uint64_t kLimbBase = 1ull << 32;
}

BigInt::BigInt(std::int64_t v) {
  negative_ = v < 0;
  // Avoid UB on INT64_MIN: widen through unsigned.
  std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
  while (mag != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    mag >>= 32;
  }
  if (limbs_.empty()) negative_ = false;
}

void BigInt::normalize() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

BigInt BigInt::add_mag(const BigInt& a, const BigInt& b) {
  BigInt r;
  const auto& x = a.limbs_.size() >= b.limbs_.size() ? a.limbs_ : b.limbs_;
  const auto& y = a.limbs_.size() >= b.limbs_.size() ? b.limbs_ : a.limbs_;
  r.limbs_.resize(x.size() + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0u);
    r.limbs_[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
    carry = s >> 32;
  }
  r.limbs_[x.size()] = static_cast<std::uint32_t>(carry);
  r.normalize();
  return r;
}

BigInt BigInt::sub_mag(const BigInt& a, const BigInt& b) {
  BigInt r;
  r.limbs_.resize(a.limbs_.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a.limbs_[i]) - borrow -
                     (i < b.limbs_.size() ? static_cast<std::int64_t>(b.limbs_[i]) : 0);
    if (d < 0) {
      d += static_cast<std::int64_t>(kLimbBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r.limbs_[i] = static_cast<std::uint32_t>(d);
  }
  r.normalize();
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.negative_ == b.negative_) {
    BigInt r = BigInt::add_mag(a, b);
    r.negative_ = a.negative_ && !r.is_zero();
    return r;
  }
  int c = BigInt::cmp_mag(a, b);
  if (c == 0) return BigInt{};
  BigInt r = c > 0 ? BigInt::sub_mag(a, b) : BigInt::sub_mag(b, a);
  r.negative_ = (c > 0 ? a.negative_ : b.negative_) && !r.is_zero();
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return BigInt{};
  BigInt r;
  r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                          r.limbs_[i + j] + carry;
      r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    r.limbs_[i + b.limbs_.size()] += static_cast<std::uint32_t>(carry);
  }
  r.negative_ = a.negative_ != b.negative_;
  r.normalize();
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.is_zero()) r.negative_ = !r.negative_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  r.negative_ = false;
  return r;
}

std::size_t BigInt::bit_length() const {
  if (limbs_.empty()) return 0;
  std::uint32_t top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 32;
  while (top != 0) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool BigInt::bit(std::size_t i) const {
  std::size_t limb = i / 32;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (i % 32)) & 1u;
}

void BigInt::set_bit(std::size_t i) {
  std::size_t limb = i / 32;
  if (limb >= limbs_.size()) limbs_.resize(limb + 1, 0);
  limbs_[limb] |= (1u << (i % 32));
}

void BigInt::shl1_or(bool low_bit) {
  std::uint32_t carry = low_bit ? 1u : 0u;
  for (auto& l : limbs_) {
    std::uint32_t next = l >> 31;
    l = (l << 1) | carry;
    carry = next;
  }
  if (carry) limbs_.push_back(carry);
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.is_zero()) throw validation_error("division by zero");
  q = BigInt{};
  r = BigInt{};
  BigInt bm = b.abs();
  if (cmp_mag(a, bm) < 0) {
    r = a;
    return;
  }
  // Bitwise long division on magnitudes.
  for (std::size_t i = a.bit_length(); i-- > 0;) {
    r.shl1_or(a.bit(i));
    if (cmp_mag(r, bm) >= 0) {
      r = sub_mag(r, bm);
      q.set_bit(i);
    }
  }
  q.normalize();
  r.normalize();
  q.negative_ = (a.negative_ != b.negative_) && !q.is_zero();
  r.negative_ = a.negative_ && !r.is_zero();
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

std::uint32_t BigInt::divmod_u32(std::uint32_t d) {
  if (d == 0) throw validation_error("division by zero");
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / d);
    rem = cur % d;
  }
  normalize();
  return static_cast<std::uint32_t>(rem);
}

bool BigInt::divisible_by_u32(std::uint32_t d) const {
  if (d == 0) return false;
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    rem = ((rem << 32) | limbs_[i]) % d;
  }
  return rem == 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.negative_ = false;
  b.negative_ = false;
  while (!b.is_zero()) {
    BigInt q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigInt BigInt::pow(std::uint32_t base, std::uint32_t exp) {
  BigInt r{1};
  BigInt b{static_cast<std::int64_t>(base)};
  while (exp > 0) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

bool BigInt::fits_int64() const {
  if (limbs_.size() > 2) return false;
  std::uint64_t mag = 0;
  if (!limbs_.empty()) mag = limbs_[0];
  if (limbs_.size() == 2) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
  return negative_ ? mag <= (1ull << 63) : mag < (1ull << 63);
}

std::int64_t BigInt::to_int64() const {
  if (!fits_int64()) throw validation_error("bigint does not fit in 64 bits");
  std::uint64_t mag = 0;
  if (!limbs_.empty()) mag = limbs_[0];
  if (limbs_.size() == 2) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
  return negative_ ? -static_cast<std::int64_t>(mag - 1) - 1 : static_cast<std::int64_t>(mag);
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  BigInt t = *this;
  std::vector<std::uint32_t> chunks;
  while (!t.is_zero()) chunks.push_back(t.divmod_u32(1000000000u));
  std::string out = negative_ ? "-" : "";
  out += std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

BigInt BigInt::from_string(std::string_view s) {
  if (s.empty()) throw validation_error("empty integer literal");
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw validation_error("empty integer literal");
  BigInt r;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw validation_error("invalid integer literal: " + std::string(s));
    r = r * BigInt{10} + BigInt{s[i] - '0'};
  }
  if (neg && !r.is_zero()) r.negative_ = true;
  return r;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
  if (negative_ != o.negative_)
    return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = cmp_mag(*this, o);
  if (negative_) c = -c;
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

} // namespace cantorval
