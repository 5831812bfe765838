#pragma once

#include <iosfwd>

#include "bigcross/graph.hpp"

namespace bigcross {

struct SvgOptions {
  double width_px = 600.0;
  /// Label each crossing with its angle in degrees.
  bool annotate_crossings = false;
};

/// Node-link drawing: one <line> per edge, one <circle> per vertex, viewBox fitted
/// to the layout's bounding box plus a 5% margin.
void render_svg(std::ostream& os, const Graph& g, const Layout& layout, const SvgOptions& opts = {});

}  // namespace bigcross
