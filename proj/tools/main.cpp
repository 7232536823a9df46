#include "cantorval/cli.hpp"
#include "cantorval/errors.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

using namespace cantorval;

int run(int argc, char** argv) {
  CLI::App app{"Exact classification and geometry of S-Cantor set differences"};
  app.require_subcommand(1);
  bool json_output = false;
  app.add_flag("--json", json_output, "Machine-readable output where a text form exists");

  // classify
  DiffSpec spec;
  auto* classify_cmd = app.add_subcommand("classify", "Classify C(l1,r1,p) - C(l2,r2,p)");
  classify_cmd->add_option("--l1", spec.l1)->required();
  classify_cmd->add_option("--r1", spec.r1)->required();
  classify_cmd->add_option("--l2", spec.l2)->required();
  classify_cmd->add_option("--r2", spec.r2)->required();
  classify_cmd->add_option("--p", spec.p)->required();

  // classify-sym
  int sym_l1 = 1, sym_l2 = 1, sym_p = 3;
  auto* sym_cmd = app.add_subcommand("classify-sym", "Classify C(l1,p) - C(l2,p)");
  sym_cmd->add_option("--l1", sym_l1)->required();
  sym_cmd->add_option("--l2", sym_l2)->required();
  sym_cmd->add_option("--p", sym_p)->required();

  // kraft
  int kraft_l = 1, kraft_p = 3;
  auto* kraft_cmd = app.add_subcommand("kraft", "Classify the self-difference of C(l,p)");
  kraft_cmd->add_option("--l", kraft_l)->required();
  kraft_cmd->add_option("--p", kraft_p)->required();

  // digits
  DiffSpec digits_spec;
  auto* digits_cmd = app.add_subcommand("digits", "Digit sets and removed blocks of a difference");
  digits_cmd->add_option("--l1", digits_spec.l1)->required();
  digits_cmd->add_option("--r1", digits_spec.r1)->required();
  digits_cmd->add_option("--l2", digits_spec.l2)->required();
  digits_cmd->add_option("--r2", digits_spec.r2)->required();
  digits_cmd->add_option("--p", digits_spec.p)->required();

  // cover / gaps
  std::string digit_text;
  int geo_p = 3, geo_depth = 1;
  auto* cover_cmd = app.add_subcommand("cover", "Depth-n closed cover of a digit set");
  cover_cmd->add_option("--digits", digit_text)->required();
  cover_cmd->add_option("--p", geo_p)->required();
  cover_cmd->add_option("--depth", geo_depth)->required();
  auto* gaps_cmd = app.add_subcommand("gaps", "Certified gaps of the depth-n cover");
  gaps_cmd->add_option("--digits", digit_text)->required();
  gaps_cmd->add_option("--p", geo_p)->required();
  gaps_cmd->add_option("--depth", geo_depth)->required();

  // member
  std::int64_t mem_num = 0, mem_den = 1;
  auto* member_cmd = app.add_subcommand("member", "Exact membership of a rational in A_p");
  member_cmd->add_option("--num", mem_num)->required();
  member_cmd->add_option("--den", mem_den)->required();
  member_cmd->add_option("--digits", digit_text)->required();
  member_cmd->add_option("--p", geo_p)->required();

  // sweep
  SweepOptions sweep_options;
  auto* sweep_cmd = app.add_subcommand("sweep", "Classify every spec up to p-max");
  sweep_cmd->add_option("--p-max", sweep_options.p_max)->required();
  sweep_cmd->add_option("--base-depth", sweep_options.base_depth);
  sweep_cmd->add_option("--probe-depth", sweep_options.probe_depth);
  sweep_cmd->add_flag("--verify", sweep_options.verify,
                      "Check each row's geometric signature against its type");
  sweep_cmd->add_option("--out", sweep_options.out_path, "Write JSONL rows to this file");

  // render
  int render_steps = 2, render_width = 1000;
  std::string render_out;
  auto* render_cmd = app.add_subcommand("render", "SVG of the first construction steps");
  render_cmd->add_option("--digits", digit_text)->required();
  render_cmd->add_option("--p", geo_p)->required();
  render_cmd->add_option("--steps", render_steps)->required();
  render_cmd->add_option("--out", render_out)->required();
  render_cmd->add_option("--width", render_width);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(spec, std::cout);
    if (sym_cmd->parsed()) return cmd_classify_sym(sym_l1, sym_l2, sym_p, std::cout);
    if (kraft_cmd->parsed()) return cmd_kraft(kraft_l, kraft_p, std::cout);
    if (digits_cmd->parsed()) return cmd_digits(digits_spec, std::cout);
    if (cover_cmd->parsed()) return cmd_cover(parse_digit_set(digit_text, geo_p), geo_depth, std::cout);
    if (gaps_cmd->parsed()) return cmd_gaps(parse_digit_set(digit_text, geo_p), geo_depth, std::cout);
    if (member_cmd->parsed())
      return cmd_member(mem_num, mem_den, parse_digit_set(digit_text, geo_p), std::cout);
    if (sweep_cmd->parsed()) {
      sweep_options.json_summary = json_output;
      return cmd_sweep(sweep_options, std::cout);
    }
    if (render_cmd->parsed()) {
      RenderSpec rs{parse_digit_set(digit_text, geo_p), render_steps, render_width};
      return cmd_render(rs, render_out, std::cout);
    }
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
