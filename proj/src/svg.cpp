#include "bigcross/svg.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

#include "bigcross/crossings.hpp"

namespace bigcross {

void render_svg(std::ostream& os, const Graph& g, const Layout& layout, const SvgOptions& opts) {
  double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  if (layout.size() > 0) {
    min_x = max_x = layout[0].x;
    min_y = max_y = layout[0].y;
    for (const Point& p : layout.positions()) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  double w = max_x - min_x, h = max_y - min_y;
  // A single vertex or a collinear layout still needs a non-empty viewport.
  const double extent = std::max({w, h, 1e-6});
  if (w < 1e-6 * extent || w == 0) w = extent;
  if (h < 1e-6 * extent || h == 0) h = extent;
  const double mx = 0.05 * w, my = 0.05 * h;
  const double vx = min_x - mx, vy = min_y - my, vw = w + 2 * mx, vh = h + 2 * my;
  const double radius = 0.012 * std::max(vw, vh);
  const double stroke = 0.004 * std::max(vw, vh);

  const auto old_flags = os.flags();
  const auto old_prec = os.precision();
  os << std::setprecision(9);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.width_px << "\" height=\""
     << opts.width_px * vh / vw << "\" viewBox=\"" << vx << ' ' << vy << ' ' << vw << ' ' << vh << "\">\n";
  os << "  <g stroke=\"#555555\" stroke-width=\"" << stroke << "\">\n";
  for (const Edge& e : g.edges()) {
    os << "    <line x1=\"" << layout[e.u].x << "\" y1=\"" << layout[e.u].y << "\" x2=\"" << layout[e.v].x
       << "\" y2=\"" << layout[e.v].y << "\"/>\n";
  }
  os << "  </g>\n";
  os << "  <g fill=\"#1f77b4\" stroke=\"none\">\n";
  for (VertexId v = 0; v < layout.size(); ++v) {
    os << "    <circle id=\"v" << v << "\" cx=\"" << layout[v].x << "\" cy=\"" << layout[v].y << "\" r=\"" << radius
       << "\"/>\n";
  }
  os << "  </g>\n";
  if (opts.annotate_crossings) {
    os << "  <g fill=\"#d62728\" font-size=\"" << 2.5 * radius << "\">\n";
    for (const Crossing& c : find_crossings(g, layout)) {
      os << "    <text x=\"" << c.point.x << "\" y=\"" << c.point.y << "\">" << std::fixed << std::setprecision(1)
         << c.theta << "</text>\n";
      os << std::defaultfloat << std::setprecision(9);
    }
    os << "  </g>\n";
  }
  os << "</svg>\n";
  os.flags(old_flags);
  os.precision(old_prec);
}

}  // namespace bigcross
