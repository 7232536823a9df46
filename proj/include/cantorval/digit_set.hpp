#pragma once

#include "cantorval/rational.hpp"

#include <vector>

namespace cantorval {

// The paper-style integer range <lo,hi>: [lo,hi] ∩ Z when lo < hi,
// {lo} when lo == hi, empty when lo > hi.
struct IntRange {
  int lo = 0;
  int hi = -1;

  bool empty() const { return lo > hi; }
  int size() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(int v) const { return lo <= v && v <= hi; }
  std::vector<int> materialize() const;
};

std::vector<int> range_set(int lo, int hi);

// A base together with a finite set of integer digits. Digit values are
// kept sorted and unique. Sets produced by Minkowski sums/differences may
// carry digits outside (-base, base); within_base() reports whether the
// set is usable by the geometry engine, which refuses widened sets.
class DigitSet {
public:
  DigitSet(int base, std::vector<int> digits);

  int base() const { return base_; }
  const std::vector<int>& digits() const { return digits_; }
  int min_digit() const { return digits_.front(); }
  int max_digit() const { return digits_.back(); }
  std::size_t size() const { return digits_.size(); }
  bool contains(int d) const;

  bool within_base() const { return within_base_; }

  bool operator==(const DigitSet& o) const = default;

private:
  int base_;
  std::vector<int> digits_;
  bool within_base_;
};

DigitSet minkowski_sum(const DigitSet& a, const DigitSet& b);
DigitSet minkowski_diff(const DigitSet& a, const DigitSet& b);
DigitSet scale(int k, const DigitSet& a);

// max - min of a nonempty digit list.
int diam(const std::vector<int>& sorted_digits);
int diam(const DigitSet& a);

// Largest jump between consecutive elements; needs at least two elements.
int delta(const std::vector<int>& sorted_digits);
int delta(const DigitSet& a);

// delta / (delta + diam) as an exact fraction.
Rational interval_ratio(const std::vector<int>& sorted_digits);
Rational interval_ratio(const DigitSet& a);

// Exact interval criterion: the digit set fills its hull iff
// 1/base >= interval_ratio, i.e. (base-1) * delta <= diam.
bool is_full_interval(const DigitSet& a);

// Difference criterion for 0, base-1 ∈ A, B and base > 2:
// A_p - B_p = [-1,1] iff delta(A - B) <= 2.
bool full_diff_interval(const DigitSet& a, const DigitSet& b);

} // namespace cantorval
