#include "cantorval/json_io.hpp"

#include "cantorval/errors.hpp"

namespace cantorval {

using nlohmann::json;

json endpoint_to_json(const Rational& x, int base) {
  // Split the reduced denominator into base^e * rest.
  BigInt rest = x.den();
  int e = 0;
  while (rest.divisible_by_u32(static_cast<std::uint32_t>(base)) && rest > BigInt{1}) {
    rest.divmod_u32(static_cast<std::uint32_t>(base));
    ++e;
  }
  json j{{"num", x.num().to_string()}, {"den_pow", e}};
  if (rest != BigInt{1}) j["den_extra"] = rest.to_string();
  return j;
}

Rational endpoint_from_json(const json& j, int base) {
  BigInt num = BigInt::from_string(j.at("num").get<std::string>());
  int e = j.at("den_pow").get<int>();
  BigInt den = BigInt::pow(static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(e));
  if (j.contains("den_extra")) den *= BigInt::from_string(j["den_extra"].get<std::string>());
  return Rational{std::move(num), std::move(den)};
}

json interval_set_to_json(const IntervalSet& s, int base) {
  json arr = json::array();
  for (const auto& iv : s.intervals())
    arr.push_back({{"lo", endpoint_to_json(iv.lo, base)}, {"hi", endpoint_to_json(iv.hi, base)}});
  return arr;
}

json gap_list_to_json(const GapList& g, int base) {
  json arr = json::array();
  for (const auto& gap : g.gaps)
    arr.push_back({{"lo", endpoint_to_json(gap.lo, base)}, {"hi", endpoint_to_json(gap.hi, base)}});
  return arr;
}

json conditions_to_json(const ConditionProfile& c) {
  return json{{"s1", c.s1},
              {"s2", c.s2},
              {"s3", c.s3},
              {"s1_star", c.s1_star},
              {"s2_star", c.s2_star}};
}

json diff_spec_to_json(const DiffSpec& s) {
  return json{{"l1", s.l1}, {"r1", s.r1}, {"l2", s.l2}, {"r2", s.r2}, {"p", s.p}};
}

json membership_to_json(const Membership& m) {
  json j{{"member", m.in() ? "In" : "Out"}};
  if (m.in()) {
    j["witness"] = json{{"preperiod", m.witness->preperiod}, {"period", m.witness->period}};
  } else {
    j["witness"] = json{
        {"reason", m.out_reason == OutReason::OutsideHull ? "outside_hull" : "exhausted"},
        {"states_explored", m.states_explored}};
  }
  return j;
}

json signature_to_json(const Signature& s) {
  json gaps = json::array();
  for (const auto& g : s.gap_probes)
    gaps.push_back(json{{"left_adjacent_certified", g.left_adjacent_certified},
                        {"right_adjacent_certified", g.right_adjacent_certified},
                        {"left_nearby_gap", g.left_nearby_gap},
                        {"right_nearby_gap", g.right_nearby_gap},
                        {"left_nearby_certified", g.left_nearby_certified},
                        {"right_nearby_certified", g.right_nearby_certified}});
  return json{{"base_depth", s.base_depth},
              {"probe_depth", s.probe_depth},
              {"is_full_hull", s.is_full_hull},
              {"gap_count", s.gap_count},
              {"has_certified_interval", s.has_certified_interval},
              {"gaps", std::move(gaps)}};
}

json sweep_row_to_json(const SweepRow& row) {
  json j = diff_spec_to_json(row.spec);
  j["type"] = to_string(row.type);
  switch (row.status) {
    case RowStatus::Consistent: j["consistent"] = true; break;
    case RowStatus::Inconsistent: j["consistent"] = false; break;
    case RowStatus::Skipped: j["consistent"] = "skipped"; break;
    case RowStatus::Unverified: break; // field omitted without --verify
  }
  return j;
}

json sweep_summary_to_json(const SweepReport& r) {
  json tallies;
  for (int t = 0; t < 5; ++t)
    tallies[to_string(static_cast<TopologicalType>(t))] = r.tally[t];
  return json{{"rows", r.rows.size()},   {"consistent", r.consistent},
              {"inconsistent", r.inconsistent}, {"skipped", r.skipped},
              {"tallies", std::move(tallies)}};
}

} // namespace cantorval
