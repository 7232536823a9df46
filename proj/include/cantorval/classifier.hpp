#pragma once

#include "cantorval/digit_set.hpp"

#include <string>
#include <vector>

namespace cantorval {

// Parameters (l, r, p) of one S-Cantor set: base-p expansions restricted to
// the l lowest and r highest digits. Requires l, r >= 1 and l + r < p.
struct SCantorSpec {
  int l = 1;
  int r = 1;
  int p = 3;

  void validate() const;
  bool operator==(const SCantorSpec&) const = default;
};

// Parameters of the difference C(l1,r1,p) - C(l2,r2,p).
struct DiffSpec {
  int l1 = 1;
  int r1 = 1;
  int l2 = 1;
  int r2 = 1;
  int p = 3;

  void validate() const;
  SCantorSpec first() const { return {l1, r1, p}; }
  SCantorSpec second() const { return {l2, r2, p}; }
  DiffSpec swapped() const { return {l2, r2, l1, r1, p}; }
  bool operator==(const DiffSpec&) const = default;
};

enum class TopologicalType {
  FullInterval,
  CantorSet,
  LCantorval,
  RCantorval,
  MCantorval,
};

std::string to_string(TopologicalType t);
TopologicalType topological_type_from_string(const std::string& s);

// The three weak and two strict parameter conditions the classification
// is phrased in. s1_star implies s1, s2_star implies s2, and s3 excludes
// both s1 and s2.
struct ConditionProfile {
  bool s1 = false;
  bool s2 = false;
  bool s3 = false;
  bool s1_star = false;
  bool s2_star = false;

  bool operator==(const ConditionProfile&) const = default;
};

// The two removed digit blocks of the difference set:
// A - B = <-p+1, p-1> \ (L ∪ R).
struct LRBlocks {
  IntRange left_range;
  IntRange right_range;

  std::vector<int> left() const { return left_range.materialize(); }
  std::vector<int> right() const { return right_range.materialize(); }
};

// Digit set <0,l-1> ∪ <p-r,p-1> of an S-Cantor set.
DigitSet a_set(const SCantorSpec& spec);

ConditionProfile conditions(const DiffSpec& spec);
LRBlocks lr_blocks(const DiffSpec& spec);

// Five-way classification of C(l1,r1,p) - C(l2,r2,p). Exactly one branch
// fires for every valid spec.
TopologicalType classify(const DiffSpec& spec);

// Which of the five branches fires; used by the partition checks.
std::vector<bool> classification_branches(const DiffSpec& spec);

// Negating a set swaps the L- and R-Cantorval classes and fixes the rest.
TopologicalType mirror(TopologicalType t);

// Classification of C(l,r,p) - C(l,r,p).
TopologicalType classify_self(const SCantorSpec& spec);

// Classification of C(l1,p) - C(l2,p) for symmetric S-Cantor sets.
TopologicalType classify_symmetric(int l1, int l2, int p);

// Self-difference of the symmetric set C(l,p) by the exact thresholds
// on l/p: interval when l/p >= 1/3, Cantor set when l/p <= 1/4,
// M-Cantorval strictly in between.
TopologicalType kraft_classify(int l, int p);

} // namespace cantorval
