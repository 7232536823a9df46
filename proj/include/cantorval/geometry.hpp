#pragma once

#include "cantorval/digit_set.hpp"
#include "cantorval/rational.hpp"

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

namespace cantorval {

// Grid rational num / base^depth in canonical form: num is not divisible
// by base unless depth == 0.
struct PAdic {
  BigInt num;
  int depth = 0;
  int base = 2;

  static PAdic make(BigInt num, int depth, int base);
  Rational to_rational() const;
};

// If x equals k / base^depth for an integer k, return k.
std::optional<BigInt> grid_numerator(const Rational& x, int base, int depth);

struct RatInterval {
  Rational lo, hi; // closed, lo <= hi
  bool operator==(const RatInterval&) const = default;
};

struct RatGap {
  Rational lo, hi; // open, lo < hi
  bool operator==(const RatGap&) const = default;
};

// Sorted list of pairwise disjoint closed intervals; touching pieces are
// merged on construction.
class IntervalSet {
public:
  IntervalSet() = default;
  static IntervalSet normalized(std::vector<RatInterval> pieces);

  const std::vector<RatInterval>& intervals() const { return v_; }
  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  bool contains(const Rational& x) const;
  bool contains(const RatInterval& i) const; // one member interval covers i
  bool subset_of(const IntervalSet& o) const;
  bool operator==(const IntervalSet&) const = default;

private:
  std::vector<RatInterval> v_;
};

struct GapList {
  Rational hull_lo, hull_hi;
  std::vector<RatGap> gaps;
};

// Interval-count limit for cover refinement. The default is 1'000'000,
// overridable through CANTORVAL_INTERVAL_BUDGET.
std::size_t default_interval_budget();

// Depth-n cover in scaled integer form: run i denotes the closed interval
//   [lo_num(i), hi_num(i)] / (base^depth * (base-1)),
// where lo_num = k_first*(base-1) + min_digit and
// hi_num = k_last*(base-1) + max_digit for word sums k. This is the
// engine-internal form; cover() materializes it with exact rationals.
struct ScaledCover {
  int base = 2;
  int depth = 0;
  int min_digit = 0;
  int max_digit = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> runs; // scaled numerators

  BigInt denominator() const;
  Rational lo_of(std::size_t i) const;
  Rational hi_of(std::size_t i) const;
};

// Hull of all possible tails beyond depth n:
// [min_digit, max_digit] / (base^n * (base-1)).
RatInterval tail_hull(const DigitSet& a, int n);

ScaledCover cover_scaled(const DigitSet& a, int n, std::size_t budget = 0);
IntervalSet cover(const DigitSet& a, int n, std::size_t budget = 0);
GapList gaps(const DigitSet& a, int n, std::size_t budget = 0);

// Sorted distinct values of sum x_i * base^(n-i) over all depth-n digit
// words. Word sums are the depth-n grid numerators of the cover cells.
std::vector<std::int64_t> word_sums(const std::vector<int>& digits, int base, int n,
                                    std::size_t element_cap = 0);

// Memoizing depth-first searcher for digit-word sums of one digit set.
// Failure states are cached across queries.
class RepSearch {
public:
  RepSearch(std::vector<int> digits, int base);

  bool representable(std::int64_t target, int depth);
  std::optional<std::vector<int>> witness(std::int64_t target, int depth);

private:
  std::vector<int> digits_;
  int base_;
  std::vector<std::int64_t> pow_;  // base^m
  std::vector<std::int64_t> low_;  // min word sum of depth m
  std::vector<std::int64_t> high_; // max word sum of depth m
  std::vector<std::unordered_set<std::int64_t>> fail_;

  void ensure_depth(int depth);
  bool solve(int m, std::int64_t t, std::vector<int>* path);
};

// Is k a depth-n word sum of A (i.e. k/p^n = x̄_n for some word)?
bool representable(const DigitSet& a, std::int64_t k, int n);
std::optional<std::vector<int>> representable_witness(const DigitSet& a, std::int64_t k, int n);

// Both k/p^n and (k+1)/p^n are depth-n representable.
bool bi_obtainable(const DigitSet& a, std::int64_t k, int n);

// For every k in <0, p-1>: k or k-p is a digit. Under this hypothesis
// bi-obtainable cells propagate to every deeper depth.
bool has_closure_property(const DigitSet& a);

// Merged union of all cells [k/p^n, (k+1)/p^n] whose both endpoints are
// depth-n representable; every returned interval is a subset of A_p when
// the closure property holds. Without it only zero-tail grid points are
// certain, so the result degenerates to singletons (empty if 0 is not a
// digit).
IntervalSet certified_intervals(const DigitSet& a, int n, std::size_t budget = 0);

} // namespace cantorval
