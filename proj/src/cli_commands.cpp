#include "cantorval/cli.hpp"

#include "cantorval/errors.hpp"
#include "cantorval/geometry.hpp"
#include "cantorval/json_io.hpp"
#include "cantorval/membership.hpp"
#include "cantorval/render.hpp"
#include "cantorval/verifier.hpp"

#include <fstream>
#include <ostream>

namespace cantorval {

using nlohmann::json;

std::vector<int> parse_digit_list(const std::string& text) {
  if (text.empty()) throw validation_error("empty digit list");
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) throw validation_error("empty entry in digit list");
    // Strict form: optional minus then decimal digits, no whitespace.
    std::size_t digits_from = tok[0] == '-' ? 1 : 0;
    if (digits_from == tok.size()) throw validation_error("invalid digit: " + tok);
    for (std::size_t i = digits_from; i < tok.size(); ++i)
      if (tok[i] < '0' || tok[i] > '9') throw validation_error("invalid digit: " + tok);
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw validation_error("digit out of range: " + tok);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

DigitSet parse_digit_set(const std::string& text, int base) {
  DigitSet set{base, parse_digit_list(text)};
  if (!set.within_base())
    throw validation_error("digits must lie strictly between -p and p");
  return set;
}

namespace {

json digit_vector(const std::vector<int>& v) { return json(v); }

json classify_payload(const DiffSpec& spec) {
  DigitSet diff = minkowski_diff(a_set(spec.first()), a_set(spec.second()));
  return json{{"spec", diff_spec_to_json(spec)},
              {"type", to_string(classify(spec))},
              {"conditions", conditions_to_json(conditions(spec))},
              {"digits", digit_vector(diff.digits())}};
}

} // namespace

int cmd_classify(const DiffSpec& spec, std::ostream& out) {
  out << classify_payload(spec).dump() << "\n";
  return kExitOk;
}

int cmd_classify_sym(int l1, int l2, int p, std::ostream& out) {
  TopologicalType t = classify_symmetric(l1, l2, p);
  DiffSpec spec{l1, l1, l2, l2, p};
  DigitSet diff = minkowski_diff(a_set(spec.first()), a_set(spec.second()));
  out << json{{"spec", json{{"l1", l1}, {"l2", l2}, {"p", p}}},
              {"type", to_string(t)},
              {"digits", digit_vector(diff.digits())}}
             .dump()
      << "\n";
  return kExitOk;
}

int cmd_kraft(int l, int p, std::ostream& out) {
  TopologicalType t = kraft_classify(l, p);
  DiffSpec spec{l, l, l, l, p};
  DigitSet diff = minkowski_diff(a_set(spec.first()), a_set(spec.second()));
  out << json{{"spec", json{{"l", l}, {"p", p}}},
              {"type", to_string(t)},
              {"digits", digit_vector(diff.digits())}}
             .dump()
      << "\n";
  return kExitOk;
}

int cmd_digits(const DiffSpec& spec, std::ostream& out) {
  DigitSet a = a_set(spec.first());
  DigitSet b = a_set(spec.second());
  DigitSet diff = minkowski_diff(a, b);
  LRBlocks blocks = lr_blocks(spec);
  out << json{{"spec", diff_spec_to_json(spec)},
              {"a", digit_vector(a.digits())},
              {"b", digit_vector(b.digits())},
              {"diff", digit_vector(diff.digits())},
              {"l_block", digit_vector(blocks.left())},
              {"r_block", digit_vector(blocks.right())}}
             .dump()
      << "\n";
  return kExitOk;
}

int cmd_cover(const DigitSet& a, int depth, std::ostream& out) {
  out << interval_set_to_json(cover(a, depth), a.base()).dump() << "\n";
  return kExitOk;
}

int cmd_gaps(const DigitSet& a, int depth, std::ostream& out) {
  out << gap_list_to_json(gaps(a, depth), a.base()).dump() << "\n";
  return kExitOk;
}

int cmd_member(std::int64_t num, std::int64_t den, const DigitSet& a, std::ostream& out) {
  if (den == 0) throw validation_error("denominator must be nonzero");
  Membership m = member(Rational{num, den}, a);
  out << membership_to_json(m).dump() << "\n";
  return kExitOk;
}

int cmd_sweep(const SweepOptions& options, std::ostream& console) {
  SweepReport report = sweep(options.p_max, options.base_depth, options.probe_depth,
                             options.verify);

  std::ofstream file;
  std::ostream* rows_out = &console;
  if (!options.out_path.empty()) {
    file.open(options.out_path);
    if (!file) throw validation_error("cannot open output file: " + options.out_path);
    rows_out = &file;
  }
  for (const auto& row : report.rows) *rows_out << sweep_row_to_json(row).dump() << "\n";

  if (options.json_summary) {
    console << sweep_summary_to_json(report).dump() << "\n";
  } else {
    console << "swept " << report.rows.size() << " specs (p <= " << options.p_max << ")";
    if (options.verify)
      console << ": " << report.consistent << " consistent, " << report.inconsistent
              << " inconsistent, " << report.skipped << " skipped";
    console << "; tallies";
    for (int t = 0; t < 5; ++t)
      console << " " << to_string(static_cast<TopologicalType>(t)) << "=" << report.tally[t];
    console << "\n";
  }
  return report.ok() ? kExitOk : kExitInconsistent;
}

int cmd_render(const RenderSpec& spec, const std::string& out_path, std::ostream& console) {
  std::string svg = render_svg(spec);
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw validation_error("cannot open output file: " + out_path);
  file << svg;
  file.close();
  console << json{{"out", out_path}, {"rows", spec.steps + 1}, {"bytes", svg.size()}}.dump()
          << "\n";
  return kExitOk;
}

} // namespace cantorval
