#pragma once

#include <optional>
#include <vector>

#include "bigcross/graph.hpp"

namespace bigcross {

struct Segment {
  Point a;
  Point b;
};

/// A pair of edges whose straight-line drawings cross at an interior point of both.
struct Crossing {
  EdgeId edge_a = 0;  // edge_a < edge_b
  EdgeId edge_b = 0;
  Point point;
  double theta = 0.0;  // acute crossing angle, degrees, in (0, 90]
};

/// Twice the signed area of triangle (a, b, c); positive when counter-clockwise.
inline double orientation(Point a, Point b, Point c) { return cross(b - a, c - a); }

/// Intersection point of two segments that cross at a single interior point of
/// both. Shared endpoints, an endpoint touching the other segment, parallel and
/// collinear-overlapping segments all yield nullopt.
std::optional<Point> proper_intersection(const Segment& s1, const Segment& s2);

/// Acute angle between the segments' directions, in degrees.
/// Throws std::invalid_argument if either segment has zero length.
double crossing_angle(const Segment& s1, const Segment& s2);

/// All pairs of non-adjacent edges that properly cross, each listed once, ordered
/// by (edge_a, edge_b).
std::vector<Crossing> find_crossings(const Graph& g, const Layout& layout);

}  // namespace bigcross
