#pragma once

#include "cantorval/classifier.hpp"
#include "cantorval/geometry.hpp"
#include "cantorval/membership.hpp"
#include "cantorval/verifier.hpp"

#include <json.hpp>

namespace cantorval {

// Exact endpoint encoding: {"num": "<integer>", "den_pow": n} denotes
// num / base^n. When the reduced denominator carries a factor coprime to
// the base (possible only for digit sets whose extreme digits are not
// multiples of base-1), the extra factor is carried losslessly in
// "den_extra". Spec-shaped surfaces never need it.
nlohmann::json endpoint_to_json(const Rational& x, int base);
Rational endpoint_from_json(const nlohmann::json& j, int base);

nlohmann::json interval_set_to_json(const IntervalSet& s, int base);
nlohmann::json gap_list_to_json(const GapList& g, int base);

nlohmann::json conditions_to_json(const ConditionProfile& c);
nlohmann::json diff_spec_to_json(const DiffSpec& s);
nlohmann::json membership_to_json(const Membership& m);
nlohmann::json signature_to_json(const Signature& s);

nlohmann::json sweep_row_to_json(const SweepRow& row);
nlohmann::json sweep_summary_to_json(const SweepReport& report);

} // namespace cantorval
