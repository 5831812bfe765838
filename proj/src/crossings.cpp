#include "bigcross/crossings.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace bigcross {

std::optional<Point> proper_intersection(const Segment& s1, const Segment& s2) {
  // Existence is decided purely from the signs of the four orientations, so a
  // rounding error in the point solve below can never flip it.
  const double o1 = orientation(s1.a, s1.b, s2.a);
  const double o2 = orientation(s1.a, s1.b, s2.b);
  const double o3 = orientation(s2.a, s2.b, s1.a);
  const double o4 = orientation(s2.a, s2.b, s1.b);
  if (o1 == 0.0 || o2 == 0.0 || o3 == 0.0 || o4 == 0.0) return std::nullopt;
  if ((o1 > 0) == (o2 > 0) || (o3 > 0) == (o4 > 0)) return std::nullopt;

  const Point r = s1.b - s1.a;
  const Point s = s2.b - s2.a;
  const double t = cross(s2.a - s1.a, s) / cross(r, s);
  return s1.a + t * r;
}

double crossing_angle(const Segment& s1, const Segment& s2) {
  const Point u = s1.b - s1.a;
  const Point v = s2.b - s2.a;
  if (norm(u) == 0.0 || norm(v) == 0.0) throw std::invalid_argument("zero-length segment");
  // atan2 keeps precision near both 0 and 90 degrees, unlike acos of the dot.
  const double rad = std::atan2(std::abs(cross(u, v)), std::abs(dot(u, v)));
  return rad * 180.0 / std::numbers::pi;
}

std::vector<Crossing> find_crossings(const Graph& g, const Layout& layout) {
  struct Box {
    double min_x, max_x, min_y, max_y;
  };
  std::vector<Crossing> out;
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  std::vector<Box> boxes(m);
  for (EdgeId i = 0; i < m; ++i) {
    const Point p = layout[edges[i].u], q = layout[edges[i].v];
    boxes[i] = {std::min(p.x, q.x), std::max(p.x, q.x), std::min(p.y, q.y), std::max(p.y, q.y)};
  }
  for (EdgeId i = 0; i < m; ++i) {
    const Edge& e = edges[i];
    const Box& bi = boxes[i];
    const Segment si{layout[e.u], layout[e.v]};
    for (EdgeId j = i + 1; j < m; ++j) {
      // A proper crossing needs overlapping interiors of the bounding boxes.
      const Box& bj = boxes[j];
      if (bj.min_x >= bi.max_x || bj.max_x <= bi.min_x || bj.min_y >= bi.max_y || bj.max_y <= bi.min_y) continue;
      const Edge& f = edges[j];
      if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
      const Segment sj{layout[f.u], layout[f.v]};
      if (auto p = proper_intersection(si, sj)) out.push_back({i, j, *p, crossing_angle(si, sj)});
    }
  }
  return out;
}

}  // namespace bigcross
