#pragma once

#include "cantorval/classifier.hpp"
#include "cantorval/digit_set.hpp"
#include "cantorval/render.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cantorval {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInconsistent = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

// "--digits" values: comma-separated integers, no whitespace.
std::vector<int> parse_digit_list(const std::string& text);

// Digit set for the CLI geometry commands; rejects digits outside
// (-base, base).
DigitSet parse_digit_set(const std::string& text, int base);

int cmd_classify(const DiffSpec& spec, std::ostream& out);
int cmd_classify_sym(int l1, int l2, int p, std::ostream& out);
int cmd_kraft(int l, int p, std::ostream& out);
int cmd_digits(const DiffSpec& spec, std::ostream& out);
int cmd_cover(const DigitSet& a, int depth, std::ostream& out);
int cmd_gaps(const DigitSet& a, int depth, std::ostream& out);
int cmd_member(std::int64_t num, std::int64_t den, const DigitSet& a, std::ostream& out);

struct SweepOptions {
  int p_max = 3;
  int base_depth = 3;
  int probe_depth = 6;
  bool verify = false;
  std::string out_path; // empty: rows to the console stream
  bool json_summary = false;
};

int cmd_sweep(const SweepOptions& options, std::ostream& console);

int cmd_render(const RenderSpec& spec, const std::string& out_path, std::ostream& console);

} // namespace cantorval
