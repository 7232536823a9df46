#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorval/errors.hpp"
#include "cantorval/geometry.hpp"
#include "cantorval/membership.hpp"
#include "cantorval/render.hpp"

#include <fstream>
#include <sstream>
#include <vector>

using namespace cantorval;

namespace {

const DigitSet figure_set{5, {-4, 0, 2, 3, 4}};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Rows of the svg as the text between <g ...> and </g>.
std::vector<std::string> row_groups(const std::string& svg) {
  std::vector<std::string> rows;
  std::size_t pos = 0;
  while ((pos = svg.find("<g id=", pos)) != std::string::npos) {
    std::size_t end = svg.find("</g>", pos);
    rows.push_back(svg.substr(pos, end - pos));
    pos = end;
  }
  return rows;
}

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
  std::size_t n = 0, pos = 0;
  while ((pos = hay.find(needle, pos)) != std::string::npos) {
    ++n;
    pos += needle.size();
  }
  return n;
}

} // namespace

TEST_CASE("rendering is deterministic") {
  RenderSpec spec{figure_set, 2, 1000};
  CHECK(render_svg(spec) == render_svg(spec));
}

TEST_CASE("figure golden file is reproduced byte for byte") {
  RenderSpec spec{figure_set, 2, 1000};
  CHECK(render_svg(spec) == read_file(std::string(GOLDEN_DIR) + "/figure1.svg"));
}

TEST_CASE("rows show the covers and ticks agree with membership") {
  RenderSpec spec{figure_set, 3, 800};
  std::string svg = render_svg(spec);
  std::vector<std::string> rows = row_groups(svg);
  REQUIRE(rows.size() == 4);

  const RatInterval hull = tail_hull(figure_set, 0);
  const Rational span = hull.hi - hull.lo;
  const Rational recip{span.den(), span.num()};
  auto x_of = [&](const Rational& v) {
    Rational pos = (v - hull.lo) * Rational{800 - 2 * spec.margin_px, 1} * recip +
                   Rational{spec.margin_px, 1};
    BigInt h = pos.round_scaled(100);
    BigInt q = h;
    std::uint32_t frac = q.divmod_u32(100);
    std::string out = q.to_string() + ".";
    out += static_cast<char>('0' + frac / 10);
    out += static_cast<char>('0' + frac % 10);
    return out;
  };

  for (int row = 0; row <= 3; ++row) {
    IntervalSet c = cover(figure_set, row);
    CHECK(count_occurrences(rows[row], "<rect") == c.size());
    for (const auto& iv : c.intervals()) {
      for (const Rational* e : {&iv.lo, &iv.hi}) {
        bool in = endpoint_membership(*e, figure_set).in();
        std::string tick = "<line x1=\"" + x_of(*e) + "\"";
        CHECK(count_occurrences(rows[row], tick) == (in ? 1u : 0u));
      }
    }
  }
}

TEST_CASE("every row-one endpoint of the figure set is a member") {
  IntervalSet c = cover(figure_set, 1);
  REQUIRE(c.size() == 2);
  for (const auto& iv : c.intervals()) {
    CHECK(endpoint_membership(iv.lo, figure_set).in());
    CHECK(endpoint_membership(iv.hi, figure_set).in());
  }
}

TEST_CASE("ternary rendering splits into 2^k bars") {
  RenderSpec spec{DigitSet{3, {0, 2}}, 3, 600};
  std::string svg = render_svg(spec);
  std::vector<std::string> rows = row_groups(svg);
  REQUIRE(rows.size() == 4);
  CHECK(count_occurrences(rows[3], "<rect") == 8);
}

TEST_CASE("full digit set renders one bar per row") {
  RenderSpec spec{DigitSet{3, {0, 1, 2}}, 2, 400};
  for (const auto& row : row_groups(render_svg(spec)))
    CHECK(count_occurrences(row, "<rect") == 1);
}

TEST_CASE("render validation") {
  CHECK_THROWS_AS(render_svg(RenderSpec{figure_set, 0, 1000}), invalid_spec_error);
  CHECK_THROWS_AS(render_svg(RenderSpec{figure_set, 2, 30}), invalid_spec_error);
  CHECK_THROWS_AS(render_svg(RenderSpec{DigitSet{3, {0, 7}}, 2, 1000}), precondition_error);
}
