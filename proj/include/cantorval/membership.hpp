#pragma once

#include "cantorval/digit_set.hpp"
#include "cantorval/geometry.hpp"
#include "cantorval/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cantorval {

enum class MemberState { In, Out };

enum class OutReason {
  None,
  OutsideHull, // query outside the hull of all tails; immediate Out
  Exhausted,   // residual graph explored completely, no infinite path
};

// Eventually periodic digit word certifying membership: the digits of the
// preperiod followed by the repeating cycle (period is never empty).
struct MemberWitness {
  std::vector<int> preperiod;
  std::vector<int> period;
};

struct Membership {
  MemberState state = MemberState::Out;
  std::optional<MemberWitness> witness; // present iff state == In
  OutReason out_reason = OutReason::None;
  std::size_t states_explored = 0;

  bool in() const { return state == MemberState::In; }
};

// Exact value of an eventually periodic base-p digit word.
Rational witness_value(const MemberWitness& w, int base);

// Decides x ∈ A_p exactly by exploring the residual automaton
// r -> base*r - digit restricted to the tail hull. The state space is
// finite because residual denominators divide den(x) and numerators stay
// inside the hull; x is a member iff an infinite path exists, i.e. iff
// the start state survives trimming of dead ends.
Membership member(const Rational& x, const DigitSet& a, std::size_t state_budget = 1u << 22);

// Gap endpoints are decided by the same oracle.
Membership endpoint_membership(const Rational& g, const DigitSet& a);

} // namespace cantorval
