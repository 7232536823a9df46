#include "cantorval/render.hpp"

#include "cantorval/errors.hpp"
#include "cantorval/geometry.hpp"
#include "cantorval/membership.hpp"

#include <sstream>

namespace cantorval {

namespace {

// Hundredths of a pixel, printed as a fixed two-decimal literal.
std::string px(const BigInt& hundredths) {
  BigInt h = hundredths;
  bool neg = h.is_negative();
  h = h.abs();
  BigInt q = h;
  std::uint32_t frac = q.divmod_u32(100);
  std::string out = neg ? "-" : "";
  out += q.to_string();
  out += '.';
  out += static_cast<char>('0' + frac / 10);
  out += static_cast<char>('0' + frac % 10);
  return out;
}

std::string px(int v) { return px(BigInt{static_cast<std::int64_t>(v) * 100}); }

} // namespace

std::string render_svg(const RenderSpec& spec, std::size_t budget) {
  if (spec.steps < 1) throw invalid_spec_error("render needs at least one step");
  if (spec.width_px < 2 * spec.margin_px + 10)
    throw invalid_spec_error("render width too small for the margins");
  const DigitSet& a = spec.digits;
  if (!a.within_base())
    throw precondition_error("render requires digits within (-base, base)");

  const RatInterval hull = tail_hull(a, 0);
  const bool degenerate = hull.lo == hull.hi;
  const Rational span = hull.hi - hull.lo;
  const int inner = spec.width_px - 2 * spec.margin_px;
  const int height = 2 * spec.margin_px + (spec.steps + 1) * spec.row_height_px;

  // x in [hull.lo, hull.hi] -> margin + (x - lo) * inner / span, as exact
  // hundredths of a pixel.
  const Rational recip_span = degenerate ? Rational{0} : Rational{span.den(), span.num()};
  auto x_px = [&](const Rational& v) {
    if (degenerate) return BigInt{(spec.margin_px + inner / 2) * std::int64_t{100}};
    Rational pos = (v - hull.lo) * Rational{inner, 1} * recip_span + Rational{spec.margin_px, 1};
    return pos.round_scaled(100);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width_px << "\" height=\""
      << height << "\" viewBox=\"0 0 " << spec.width_px << " " << height << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << spec.width_px << "\" height=\"" << height
      << "\" fill=\"#ffffff\"/>\n";

  for (int row = 0; row <= spec.steps; ++row) {
    const int y_top = spec.margin_px + row * spec.row_height_px;
    const int y_bar = y_top + spec.tick_px;
    IntervalSet c = cover(a, row, budget);
    svg << "<g id=\"step" << row << "\">\n";
    for (const auto& iv : c.intervals()) {
      BigInt x0 = x_px(iv.lo);
      BigInt x1 = x_px(iv.hi);
      // Width from the rounded coordinates, so bars and ticks align.
      svg << "  <rect x=\"" << px(x0) << "\" y=\"" << px(y_bar) << "\" width=\"" << px(x1 - x0)
          << "\" height=\"" << px(spec.bar_height_px) << "\" fill=\"#30343b\"/>\n";
      for (const Rational* endpoint : {&iv.lo, &iv.hi}) {
        if (endpoint_membership(*endpoint, a).in()) {
          std::string xe = px(x_px(*endpoint));
          svg << "  <line x1=\"" << xe << "\" y1=\"" << px(y_top) << "\" x2=\"" << xe
              << "\" y2=\"" << px(y_bar + spec.bar_height_px + spec.tick_px)
              << "\" stroke=\"#30343b\" stroke-width=\"1.50\"/>\n";
        }
      }
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

} // namespace cantorval
