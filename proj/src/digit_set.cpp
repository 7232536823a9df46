#include "cantorval/digit_set.hpp"

#include "cantorval/errors.hpp"

#include <algorithm>

namespace cantorval {

std::vector<int> IntRange::materialize() const {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

std::vector<int> range_set(int lo, int hi) { return IntRange{lo, hi}.materialize(); }

DigitSet::DigitSet(int base, std::vector<int> digits) : base_(base), digits_(std::move(digits)) {
  if (base_ < 2) throw invalid_spec_error("digit set base must be at least 2");
  if (digits_.empty()) throw empty_set_error("digit set must be nonempty");
  std::sort(digits_.begin(), digits_.end());
  digits_.erase(std::unique(digits_.begin(), digits_.end()), digits_.end());
  within_base_ = digits_.front() > -base_ && digits_.back() < base_;
}

bool DigitSet::contains(int d) const {
  return std::binary_search(digits_.begin(), digits_.end(), d);
}

namespace {

DigitSet combine(const DigitSet& a, const DigitSet& b, int sign) {
  if (a.base() != b.base())
    throw base_mismatch_error("digit sets have different bases");
  if (!a.within_base() || !b.within_base())
    throw precondition_error("minkowski operands must have digits within (-base, base)");
  // Results live in (-2(p-1), 2(p-1)); a flat presence table beats a set.
  const int offset = 2 * (a.base() - 1);
  std::vector<char> seen(static_cast<std::size_t>(4 * a.base() - 3), 0);
  for (int x : a.digits())
    for (int y : b.digits()) seen[static_cast<std::size_t>(x + sign * y + offset)] = 1;
  std::vector<int> out;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back(static_cast<int>(i) - offset);
  return DigitSet{a.base(), std::move(out)};
}

} // namespace

DigitSet minkowski_sum(const DigitSet& a, const DigitSet& b) { return combine(a, b, +1); }

DigitSet minkowski_diff(const DigitSet& a, const DigitSet& b) { return combine(a, b, -1); }

DigitSet scale(int k, const DigitSet& a) {
  std::vector<int> out;
  out.reserve(a.size());
  for (int d : a.digits()) out.push_back(k * d);
  return DigitSet{a.base(), std::move(out)};
}

int diam(const std::vector<int>& sorted_digits) {
  if (sorted_digits.empty()) throw empty_set_error("diam of empty set");
  return sorted_digits.back() - sorted_digits.front();
}

int diam(const DigitSet& a) { return diam(a.digits()); }

int delta(const std::vector<int>& sorted_digits) {
  if (sorted_digits.size() < 2)
    throw too_few_elements_error("delta needs at least two elements");
  int best = 0;
  for (std::size_t i = 1; i < sorted_digits.size(); ++i)
    best = std::max(best, sorted_digits[i] - sorted_digits[i - 1]);
  return best;
}

int delta(const DigitSet& a) { return delta(a.digits()); }

Rational interval_ratio(const std::vector<int>& sorted_digits) {
  int d = delta(sorted_digits);
  return Rational{d, d + diam(sorted_digits)};
}

Rational interval_ratio(const DigitSet& a) { return interval_ratio(a.digits()); }

bool is_full_interval(const DigitSet& a) {
  // 1/p >= delta/(delta+diam)  <=>  (p-1)*delta <= diam, all in integers.
  return static_cast<long long>(a.base() - 1) * delta(a) <= diam(a);
}

bool full_diff_interval(const DigitSet& a, const DigitSet& b) {
  if (a.base() != b.base())
    throw base_mismatch_error("digit sets have different bases");
  int p = a.base();
  if (p <= 2) throw precondition_error("difference criterion needs base > 2");
  if (!a.contains(0) || !a.contains(p - 1) || !b.contains(0) || !b.contains(p - 1))
    throw precondition_error("difference criterion needs 0 and base-1 in both sets");
  return delta(minkowski_diff(a, b)) <= 2;
}

} // namespace cantorval
