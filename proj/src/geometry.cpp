#include "cantorval/geometry.hpp"

#include "cantorval/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

namespace cantorval {

namespace {

constexpr std::int64_t kGuardLimit = std::int64_t{1} << 61;

// Largest m with base^(m+2) (and the scaled-comparison headroom around it)
// still safe in 64-bit arithmetic.
void check_depth_fits(int base, int depth) {
  std::int64_t v = 1;
  for (int i = 0; i < depth + 2; ++i) {
    if (v > kGuardLimit / base)
      throw budget_error("depth " + std::to_string(depth) + " exceeds the 64-bit exact engine for base " +
                         std::to_string(base));
    v *= base;
  }
}

std::size_t resolve_budget(std::size_t budget) {
  return budget == 0 ? default_interval_budget() : budget;
}

void require_geometry_usable(const DigitSet& a) {
  if (!a.within_base())
    throw precondition_error("geometry requires digits within (-base, base)");
}

} // namespace

std::size_t default_interval_budget() {
  static const std::size_t value = [] {
    if (const char* env = std::getenv("CANTORVAL_INTERVAL_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(1'000'000);
  }();
  return value;
}

PAdic PAdic::make(BigInt num, int depth, int base) {
  if (base < 2) throw invalid_spec_error("p-adic base must be at least 2");
  if (depth < 0) throw invalid_spec_error("p-adic depth must be nonnegative");
  PAdic g{std::move(num), depth, base};
  while (g.depth > 0 && g.num.divisible_by_u32(static_cast<std::uint32_t>(base))) {
    g.num.divmod_u32(static_cast<std::uint32_t>(base));
    --g.depth;
  }
  return g;
}

Rational PAdic::to_rational() const {
  return Rational::padic(num, depth, static_cast<std::uint32_t>(base));
}

std::optional<BigInt> grid_numerator(const Rational& x, int base, int depth) {
  // x = num/den reduced; x * base^depth is integral iff den | base^depth.
  BigInt scale = BigInt::pow(static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(depth));
  BigInt q, r;
  BigInt::divmod(scale, x.den(), q, r);
  if (!r.is_zero()) return std::nullopt;
  return x.num() * q;
}

IntervalSet IntervalSet::normalized(std::vector<RatInterval> pieces) {
  for (const auto& p : pieces)
    if (p.lo > p.hi) throw validation_error("interval with lo > hi");
  std::sort(pieces.begin(), pieces.end(),
            [](const RatInterval& a, const RatInterval& b) { return a.lo < b.lo; });
  IntervalSet out;
  for (auto& p : pieces) {
    if (!out.v_.empty() && p.lo <= out.v_.back().hi) {
      if (p.hi > out.v_.back().hi) out.v_.back().hi = std::move(p.hi);
    } else {
      out.v_.push_back(std::move(p));
    }
  }
  return out;
}

bool IntervalSet::contains(const Rational& x) const {
  auto it = std::partition_point(v_.begin(), v_.end(),
                                 [&](const RatInterval& i) { return i.hi < x; });
  return it != v_.end() && it->lo <= x;
}

bool IntervalSet::contains(const RatInterval& i) const {
  auto it = std::partition_point(v_.begin(), v_.end(),
                                 [&](const RatInterval& m) { return m.hi < i.lo; });
  return it != v_.end() && it->lo <= i.lo && i.hi <= it->hi;
}

bool IntervalSet::subset_of(const IntervalSet& o) const {
  for (const auto& i : v_)
    if (!o.contains(i)) return false;
  return true;
}

RatInterval tail_hull(const DigitSet& a, int n) {
  if (n < 0) throw validation_error("tail hull depth must be nonnegative");
  BigInt den = BigInt::pow(static_cast<std::uint32_t>(a.base()), static_cast<std::uint32_t>(n)) *
               BigInt{a.base() - 1};
  return RatInterval{Rational{BigInt{a.min_digit()}, den}, Rational{BigInt{a.max_digit()}, den}};
}

BigInt ScaledCover::denominator() const {
  return BigInt::pow(static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(depth)) *
         BigInt{base - 1};
}

Rational ScaledCover::lo_of(std::size_t i) const {
  return Rational{BigInt{runs[i].first}, denominator()};
}

Rational ScaledCover::hi_of(std::size_t i) const {
  return Rational{BigInt{runs[i].second}, denominator()};
}

ScaledCover cover_scaled(const DigitSet& a, int n, std::size_t budget) {
  require_geometry_usable(a);
  if (n < 0) throw validation_error("cover depth must be nonnegative");
  check_depth_fits(a.base(), n);
  budget = resolve_budget(budget);

  const std::int64_t p = a.base();
  ScaledCover c;
  c.base = a.base();
  c.depth = n;
  c.min_digit = a.min_digit();
  c.max_digit = a.max_digit();
  // Depth 0: the tail hull itself.
  c.runs = {{a.min_digit(), a.max_digit()}};

  std::int64_t digit_scale = p - 1; // p^(d-1) * (p-1) at refinement step d
  for (int d = 1; d <= n; ++d) {
    if (c.runs.size() > (std::size_t{16} << 20) / a.size())
      throw budget_error("cover refinement exceeds the interval budget");
    std::vector<std::pair<std::int64_t, std::int64_t>> next;
    next.reserve(c.runs.size() * a.size());
    for (int digit : a.digits()) {
      // Child cover (digit + previous)/p: previous numerators are over
      // p^(d-1)*(p-1), children over p^d*(p-1), so the digit contributes
      // digit * p^(d-1) * (p-1).
      const std::int64_t shift = digit * digit_scale;
      for (const auto& r : c.runs) next.emplace_back(shift + r.first, shift + r.second);
    }
    digit_scale *= p;
    std::sort(next.begin(), next.end());
    std::vector<std::pair<std::int64_t, std::int64_t>> merged;
    for (const auto& r : next) {
      if (!merged.empty() && r.first <= merged.back().second) {
        merged.back().second = std::max(merged.back().second, r.second);
      } else {
        merged.push_back(r);
      }
    }
    if (merged.size() > budget)
      throw budget_error("cover at depth " + std::to_string(d) + " exceeds the interval budget");
    c.runs = std::move(merged);
  }
  return c;
}

IntervalSet cover(const DigitSet& a, int n, std::size_t budget) {
  ScaledCover c = cover_scaled(a, n, budget);
  std::vector<RatInterval> pieces;
  pieces.reserve(c.runs.size());
  for (std::size_t i = 0; i < c.runs.size(); ++i)
    pieces.push_back(RatInterval{c.lo_of(i), c.hi_of(i)});
  return IntervalSet::normalized(std::move(pieces));
}

GapList gaps(const DigitSet& a, int n, std::size_t budget) {
  ScaledCover c = cover_scaled(a, n, budget);
  GapList g;
  g.hull_lo = c.lo_of(0);
  g.hull_hi = c.hi_of(c.runs.size() - 1);
  for (std::size_t i = 0; i + 1 < c.runs.size(); ++i)
    g.gaps.push_back(RatGap{c.hi_of(i), c.lo_of(i + 1)});
  return g;
}

std::vector<std::int64_t> word_sums(const std::vector<int>& digits, int base, int n,
                                    std::size_t element_cap) {
  if (base < 2) throw invalid_spec_error("word sums need base >= 2");
  if (n < 0) throw validation_error("word sum depth must be nonnegative");
  check_depth_fits(base, n);
  if (element_cap == 0) element_cap = std::size_t{8} << 20;

  std::vector<std::int64_t> sums{0};
  for (int d = 0; d < n; ++d) {
    if (sums.size() * digits.size() > element_cap)
      throw budget_error("word-sum enumeration exceeds the element budget");
    std::vector<std::int64_t> next;
    next.reserve(sums.size() * digits.size());
    for (std::int64_t s : sums) {
      for (int digit : digits) next.push_back(s * base + digit);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    sums = std::move(next);
  }
  return sums;
}

RepSearch::RepSearch(std::vector<int> digits, int base) : digits_(std::move(digits)), base_(base) {
  if (base_ < 2) throw invalid_spec_error("representability search needs base >= 2");
  if (digits_.empty()) throw empty_set_error("representability search needs digits");
  std::sort(digits_.begin(), digits_.end());
  digits_.erase(std::unique(digits_.begin(), digits_.end()), digits_.end());
  pow_ = {1};
  low_ = {0};
  high_ = {0};
  fail_.resize(1);
}

void RepSearch::ensure_depth(int depth) {
  check_depth_fits(base_, depth);
  while (static_cast<int>(pow_.size()) <= depth) {
    pow_.push_back(pow_.back() * base_);
    low_.push_back(low_.back() * base_ + digits_.front());
    high_.push_back(high_.back() * base_ + digits_.back());
    fail_.emplace_back();
  }
}

bool RepSearch::solve(int m, std::int64_t t, std::vector<int>* path) {
  if (m == 0) return t == 0;
  if (t < low_[m] || t > high_[m]) return false;
  if (fail_[m].count(t)) return false;
  for (int digit : digits_) {
    std::int64_t rest = t - static_cast<std::int64_t>(digit) * pow_[m - 1];
    if (rest < low_[m - 1]) break; // digits ascend, rest only shrinks
    if (rest > high_[m - 1]) continue;
    if (path) path->push_back(digit);
    if (solve(m - 1, rest, path)) return true;
    if (path) path->pop_back();
  }
  fail_[m].insert(t);
  return false;
}

bool RepSearch::representable(std::int64_t target, int depth) {
  if (depth < 0) throw validation_error("representability depth must be nonnegative");
  ensure_depth(depth);
  return solve(depth, target, nullptr);
}

std::optional<std::vector<int>> RepSearch::witness(std::int64_t target, int depth) {
  if (depth < 0) throw validation_error("representability depth must be nonnegative");
  ensure_depth(depth);
  std::vector<int> path;
  if (!solve(depth, target, &path)) return std::nullopt;
  return path;
}

bool representable(const DigitSet& a, std::int64_t k, int n) {
  RepSearch rs{a.digits(), a.base()};
  return rs.representable(k, n);
}

std::optional<std::vector<int>> representable_witness(const DigitSet& a, std::int64_t k, int n) {
  RepSearch rs{a.digits(), a.base()};
  return rs.witness(k, n);
}

bool bi_obtainable(const DigitSet& a, std::int64_t k, int n) {
  RepSearch rs{a.digits(), a.base()};
  return rs.representable(k, n) && rs.representable(k + 1, n);
}

bool has_closure_property(const DigitSet& a) {
  for (int k = 0; k <= a.base() - 1; ++k) {
    if (!a.contains(k) && !a.contains(k - a.base())) return false;
  }
  return true;
}

IntervalSet certified_intervals(const DigitSet& a, int n, std::size_t budget) {
  require_geometry_usable(a);
  if (n < 0) throw validation_error("certification depth must be nonnegative");
  budget = resolve_budget(budget);

  std::vector<std::int64_t> sums = word_sums(a.digits(), a.base(), n);
  std::vector<RatInterval> pieces;
  const std::uint32_t base = static_cast<std::uint32_t>(a.base());

  if (has_closure_property(a)) {
    // Runs of consecutive word sums of length >= 2 are certified cells.
    std::size_t i = 0;
    while (i < sums.size()) {
      std::size_t j = i;
      while (j + 1 < sums.size() && sums[j + 1] == sums[j] + 1) ++j;
      if (j > i)
        pieces.push_back(RatInterval{Rational::padic(BigInt{sums[i]}, n, base),
                                     Rational::padic(BigInt{sums[j]}, n, base)});
      i = j + 1;
    }
  } else if (a.contains(0)) {
    // Only zero-tail finite expansions are certain without the closure
    // property: degenerate one-point certificates.
    for (std::int64_t k : sums) {
      Rational v = Rational::padic(BigInt{k}, n, base);
      pieces.push_back(RatInterval{v, v});
    }
  }
  if (pieces.size() > budget)
    throw budget_error("certified intervals exceed the interval budget");
  return IntervalSet::normalized(std::move(pieces));
}

} // namespace cantorval
