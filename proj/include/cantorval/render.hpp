#pragma once

#include "cantorval/digit_set.hpp"

#include <string>

namespace cantorval {

// Construction-stage drawing: rows 0..steps show successive covers as
// horizontal bars; an endpoint gets a vertical tick iff it belongs to the
// rendered set. Output is byte-deterministic for identical inputs.
struct RenderSpec {
  DigitSet digits;
  int steps = 2;
  int width_px = 1000;
  int row_height_px = 40;
  int bar_height_px = 14;
  int tick_px = 8;
  int margin_px = 24;
};

std::string render_svg(const RenderSpec& spec, std::size_t budget = 0);

} // namespace cantorval
