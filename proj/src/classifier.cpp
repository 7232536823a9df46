#include "cantorval/classifier.hpp"

#include "cantorval/errors.hpp"

#include <algorithm>

namespace cantorval {

void SCantorSpec::validate() const {
  if (p <= 2) throw invalid_spec_error("base p must be greater than 2");
  if (l < 1 || r < 1) throw invalid_spec_error("l and r must be at least 1");
  if (l + r >= p) throw invalid_spec_error("l + r must be less than p");
}

void DiffSpec::validate() const {
  first().validate();
  second().validate();
}

std::string to_string(TopologicalType t) {
  switch (t) {
    case TopologicalType::FullInterval: return "FullInterval";
    case TopologicalType::CantorSet: return "CantorSet";
    case TopologicalType::LCantorval: return "LCantorval";
    case TopologicalType::RCantorval: return "RCantorval";
    case TopologicalType::MCantorval: return "MCantorval";
  }
  throw error("unreachable topological type");
}

TopologicalType topological_type_from_string(const std::string& s) {
  if (s == "FullInterval") return TopologicalType::FullInterval;
  if (s == "CantorSet") return TopologicalType::CantorSet;
  if (s == "LCantorval") return TopologicalType::LCantorval;
  if (s == "RCantorval") return TopologicalType::RCantorval;
  if (s == "MCantorval") return TopologicalType::MCantorval;
  throw validation_error("unknown topological type: " + s);
}

DigitSet a_set(const SCantorSpec& spec) {
  spec.validate();
  std::vector<int> digits = range_set(0, spec.l - 1);
  std::vector<int> high = range_set(spec.p - spec.r, spec.p - 1);
  digits.insert(digits.end(), high.begin(), high.end());
  return DigitSet{spec.p, std::move(digits)};
}

ConditionProfile conditions(const DiffSpec& s) {
  s.validate();
  ConditionProfile c;
  c.s1 = s.l1 + s.l2 + s.r2 >= s.p || s.l1 + s.r1 + s.r2 >= s.p;
  c.s2 = s.l1 + s.r1 + s.l2 >= s.p || s.r1 + s.l2 + s.r2 >= s.p;
  c.s3 = s.l1 + s.r1 + s.l2 + s.r2 <= s.p;
  c.s1_star = s.l1 + s.l2 + s.r2 > s.p || s.l1 + s.r1 + s.r2 > s.p;
  c.s2_star = s.l1 + s.r1 + s.l2 > s.p || s.r1 + s.l2 + s.r2 > s.p;
  return c;
}

LRBlocks lr_blocks(const DiffSpec& s) {
  s.validate();
  LRBlocks b;
  b.left_range = IntRange{s.l1 + s.r2 - s.p, std::min(-s.l2, -s.r1)};
  b.right_range = IntRange{std::max(s.l1, s.r2), s.p - s.r1 - s.l2};
  return b;
}

std::vector<bool> classification_branches(const DiffSpec& spec) {
  ConditionProfile c = conditions(spec);
  return {
      c.s1 && c.s2,
      c.s3,
      c.s1_star && !c.s2,
      c.s2_star && !c.s1,
      !c.s1_star && !c.s2_star && !c.s3 && !(c.s1 && c.s2),
  };
}

TopologicalType classify(const DiffSpec& spec) {
  ConditionProfile c = conditions(spec);
  if (c.s1 && c.s2) return TopologicalType::FullInterval;
  if (c.s3) return TopologicalType::CantorSet;
  if (c.s1_star && !c.s2) return TopologicalType::LCantorval;
  if (c.s2_star && !c.s1) return TopologicalType::RCantorval;
  return TopologicalType::MCantorval;
}

TopologicalType mirror(TopologicalType t) {
  switch (t) {
    case TopologicalType::LCantorval: return TopologicalType::RCantorval;
    case TopologicalType::RCantorval: return TopologicalType::LCantorval;
    default: return t;
  }
}

TopologicalType classify_self(const SCantorSpec& spec) {
  return classify(DiffSpec{spec.l, spec.r, spec.l, spec.r, spec.p});
}

TopologicalType classify_symmetric(int l1, int l2, int p) {
  if (p <= 2 || l1 < 1 || l2 < 1 || 2 * l1 >= p || 2 * l2 >= p)
    throw invalid_spec_error("symmetric spec needs 1 <= l and 2l < p");
  return classify(DiffSpec{l1, l1, l2, l2, p});
}

TopologicalType kraft_classify(int l, int p) {
  if (p <= 2 || l < 1 || 2 * l >= p)
    throw invalid_spec_error("kraft spec needs 1 <= l and 2l < p");
  if (3 * l >= p) return TopologicalType::FullInterval; // l/p >= 1/3
  if (4 * l <= p) return TopologicalType::CantorSet;    // l/p <= 1/4
  return TopologicalType::MCantorval;
}

} // namespace cantorval
