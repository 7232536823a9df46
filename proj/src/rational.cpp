#include "cantorval/rational.hpp"

#include "cantorval/errors.hpp"

#include <utility>

namespace cantorval {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw validation_error("rational with zero denominator");
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  reduce();
}

void Rational::reduce() {
  if (num_.is_zero()) {
    den_ = BigInt{1};
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (g == BigInt{1}) return;
  num_ = num_ / g;
  den_ = den_ / g;
}

Rational Rational::padic(BigInt num, int depth, std::uint32_t base) {
  if (depth < 0) throw validation_error("negative p-adic depth");
  return Rational{std::move(num), BigInt::pow(base, static_cast<std::uint32_t>(depth))};
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational{a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational{a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational{a.num_ * b.num_, a.den_ * b.den_};
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  return num_ * o.den_ <=> o.num_ * den_;
}

BigInt Rational::round_scaled(std::int64_t scale) const {
  BigInt t = num_ * BigInt{scale};
  bool neg = t.is_negative();
  BigInt q, r;
  BigInt::divmod(t.abs(), den_, q, r);
  if (r + r >= den_) q += BigInt{1};
  return neg ? -q : q;
}

} // namespace cantorval
