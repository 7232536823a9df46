#include "cantorval/membership.hpp"

#include "cantorval/errors.hpp"

#include <deque>
#include <map>
#include <utility>

namespace cantorval {

Rational witness_value(const MemberWitness& w, int base) {
  if (w.period.empty()) throw validation_error("member witness needs a nonempty period");
  const std::uint32_t p = static_cast<std::uint32_t>(base);
  // Preperiod contributes sum pre_i / p^i.
  BigInt pre_num{0};
  for (int d : w.preperiod) pre_num = pre_num * BigInt{base} + BigInt{d};
  const int a = static_cast<int>(w.preperiod.size());
  // Cycle value y = K / (p^m - 1) with K the cycle word sum.
  BigInt cycle_num{0};
  for (int d : w.period) cycle_num = cycle_num * BigInt{base} + BigInt{d};
  BigInt pm = BigInt::pow(p, static_cast<std::uint32_t>(w.period.size()));
  Rational cycle{cycle_num, pm - BigInt{1}};
  Rational pre = Rational::padic(pre_num, a, p);
  BigInt pa = BigInt::pow(p, static_cast<std::uint32_t>(a));
  return pre + cycle * Rational{BigInt{1}, pa};
}

Membership member(const Rational& x, const DigitSet& a, std::size_t state_budget) {
  if (!a.within_base())
    throw precondition_error("membership requires digits within (-base, base)");
  const int p = a.base();
  const BigInt den = x.den();
  const BigInt pm1{p - 1};

  // Residual states share the fixed denominator den(x); a state is its
  // numerator. r is inside the hull iff dmin*den <= r*(p-1) <= dmax*den.
  const BigInt lo_bound = BigInt{a.min_digit()} * den;
  const BigInt hi_bound = BigInt{a.max_digit()} * den;
  auto in_hull = [&](const BigInt& num) {
    BigInt scaled = num * pm1;
    return lo_bound <= scaled && scaled <= hi_bound;
  };

  Membership result;
  if (!in_hull(x.num())) {
    result.out_reason = OutReason::OutsideHull;
    return result;
  }

  struct Node {
    BigInt num;
    std::vector<std::pair<int, std::size_t>> succ; // (digit, node index)
    std::size_t out_degree = 0;
    std::vector<std::size_t> preds;
    bool dead = false;
  };
  std::vector<Node> nodes;
  std::map<BigInt, std::size_t> index;

  auto intern = [&](const BigInt& num) {
    auto [it, inserted] = index.try_emplace(num, nodes.size());
    if (inserted) {
      if (nodes.size() >= state_budget)
        throw budget_error("membership state budget exceeded");
      nodes.push_back(Node{num, {}, 0, {}, false});
    }
    return it->second;
  };

  intern(x.num());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (int digit : a.digits()) {
      BigInt next = nodes[i].num * BigInt{p} - BigInt{digit} * den;
      if (!in_hull(next)) continue;
      std::size_t j = intern(next);
      nodes[i].succ.emplace_back(digit, j);
      nodes[i].out_degree++;
      nodes[j].preds.push_back(i);
    }
  }
  result.states_explored = nodes.size();

  // Trim states with no way forward; whatever survives carries an
  // infinite path, and the start reaches everything it spawned.
  std::deque<std::size_t> dead;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].out_degree == 0) {
      nodes[i].dead = true;
      dead.push_back(i);
    }
  while (!dead.empty()) {
    std::size_t i = dead.front();
    dead.pop_front();
    for (std::size_t pred : nodes[i].preds) {
      if (nodes[pred].dead) continue;
      if (--nodes[pred].out_degree == 0) {
        nodes[pred].dead = true;
        dead.push_back(pred);
      }
    }
  }

  if (nodes[0].dead) {
    result.out_reason = OutReason::Exhausted;
    return result;
  }

  // Walk the live subgraph taking the smallest live digit until a state
  // repeats; split the walk into preperiod + cycle.
  std::vector<int> walk_digits;
  std::vector<std::size_t> walk_nodes;
  std::map<std::size_t, std::size_t> seen_at; // node -> position in walk
  std::size_t cur = 0;
  while (true) {
    auto it = seen_at.find(cur);
    if (it != seen_at.end()) {
      MemberWitness w;
      w.preperiod.assign(walk_digits.begin(), walk_digits.begin() + it->second);
      w.period.assign(walk_digits.begin() + it->second, walk_digits.end());
      result.state = MemberState::In;
      result.witness = std::move(w);
      return result;
    }
    seen_at.emplace(cur, walk_digits.size());
    walk_nodes.push_back(cur);
    bool advanced = false;
    for (const auto& [digit, j] : nodes[cur].succ) {
      if (nodes[j].dead) continue;
      walk_digits.push_back(digit);
      cur = j;
      advanced = true;
      break;
    }
    if (!advanced) throw error("live membership state without live successor");
  }
}

Membership endpoint_membership(const Rational& g, const DigitSet& a) { return member(g, a); }

} // namespace cantorval
