#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorval/bigint.hpp"
#include "cantorval/errors.hpp"
#include "cantorval/rational.hpp"

#include <random>

using namespace cantorval;

TEST_CASE("bigint round-trips small values through strings") {
  for (std::int64_t v : {0ll, 1ll, -1ll, 42ll, -1000000007ll, (1ll << 62), -(1ll << 62)}) {
    BigInt b{v};
    CHECK(b.to_string() == std::to_string(v));
    CHECK(BigInt::from_string(b.to_string()) == b);
    CHECK(b.fits_int64());
    CHECK(b.to_int64() == v);
  }
}

namespace {

std::string i128_to_string(__int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : v;
  std::string out;
  while (mag != 0) {
    out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  return neg ? "-" + out : out;
}

} // namespace

TEST_CASE("bigint arithmetic agrees with native 128-bit arithmetic") {
  std::mt19937_64 rng{20240817};
  std::uniform_int_distribution<std::int64_t> dist(-(1ll << 40), 1ll << 40);
  for (int i = 0; i < 2000; ++i) {
    std::int64_t a = dist(rng), b = dist(rng);
    CHECK((BigInt{a} + BigInt{b}).to_int64() == a + b);
    CHECK((BigInt{a} - BigInt{b}).to_int64() == a - b);
    CHECK((BigInt{a} * BigInt{b}).to_string() ==
          i128_to_string(static_cast<__int128>(a) * b));
    if (b != 0) {
      BigInt q, r;
      BigInt::divmod(BigInt{a}, BigInt{b}, q, r);
      CHECK(q.to_int64() == a / b);
      CHECK(r.to_int64() == a % b);
    }
  }
}

TEST_CASE("bigint handles multi-limb products") {
  BigInt x = BigInt::from_string("123456789012345678901234567890");
  BigInt y = BigInt::from_string("987654321098765432109876543210");
  CHECK((x * y).to_string() == "121932631137021795226185032733622923332237463801111263526900");
  CHECK((x * y) / y == x);
  CHECK((x * y) % y == BigInt{0});
}

TEST_CASE("bigint division semantics are truncation toward zero") {
  CHECK((BigInt{7} / BigInt{2}).to_int64() == 3);
  CHECK((BigInt{-7} / BigInt{2}).to_int64() == -3);
  CHECK((BigInt{7} % BigInt{-2}).to_int64() == 1);
  CHECK((BigInt{-7} % BigInt{2}).to_int64() == -1);
  CHECK_THROWS_AS(BigInt{1} / BigInt{0}, validation_error);
}

TEST_CASE("gcd and pow") {
  CHECK(BigInt::gcd(BigInt{48}, BigInt{-18}) == BigInt{6});
  CHECK(BigInt::gcd(BigInt{0}, BigInt{5}) == BigInt{5});
  CHECK(BigInt::pow(7, 0) == BigInt{1});
  CHECK(BigInt::pow(3, 20).to_int64() == 3486784401ll);
  CHECK(BigInt::pow(10, 30).to_string() == std::string("1") + std::string(30, '0'));
}

TEST_CASE("rational reduces and compares exactly") {
  Rational half{1, 2};
  CHECK(Rational{2, 4} == half);
  CHECK(Rational{-3, -6} == half);
  CHECK(Rational{3, -6} == -half);
  CHECK(Rational{1, 3} < half);
  CHECK(half + half == Rational{1});
  CHECK(Rational{1, 6} + Rational{1, 3} == half);
  CHECK(Rational{1, 3} * Rational{3, 7} == Rational{1, 7});
  CHECK((half - Rational{2, 3}) == Rational{-1, 6});
  CHECK(Rational{1, 3}.to_string() == "1/3");
  CHECK_THROWS_AS(Rational(1, 0), validation_error);
}

TEST_CASE("rational ordering is dense around grid points") {
  Rational a{333333, 1000000};
  Rational third{1, 3};
  CHECK(a < third);
  CHECK(Rational{333334, 1000000} > third);
}

TEST_CASE("round_scaled rounds half away from zero") {
  CHECK(Rational{1, 2}.round_scaled(1) == BigInt{1});
  CHECK(Rational{-1, 2}.round_scaled(1) == BigInt{-1});
  CHECK(Rational{1, 3}.round_scaled(100) == BigInt{33});
  CHECK(Rational{2, 3}.round_scaled(100) == BigInt{67});
  CHECK(Rational{-2, 3}.round_scaled(100) == BigInt{-67});
}

TEST_CASE("padic constructor") {
  CHECK(Rational::padic(BigInt{-3}, 1, 5) == Rational{-3, 5});
  CHECK(Rational::padic(BigInt{10}, 2, 5) == Rational{2, 5});
  CHECK(Rational::padic(BigInt{0}, 4, 3) == Rational{0});
}
