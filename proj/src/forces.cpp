#include "bigcross/forces.hpp"

#include <numbers>

namespace bigcross {

namespace {

struct EdgeFrame {
  Point dir;     // unit direction
  double len;
  bool ok;
};

EdgeFrame frame(Point from, Point to) {
  const Point v = to - from;
  const double len = norm(v);
  if (len < kNormalizeGuard) return {{0.0, 0.0}, len, false};
  return {(1.0 / len) * v, len, true};
}

// Unit vector from -> to scaled by magnitude; zero if the points (nearly) coincide.
ForceVector toward(Point from, Point to, double magnitude) {
  const EdgeFrame f = frame(from, to);
  return f.ok ? magnitude * f.dir : ForceVector{};
}

Point perp(Point p) { return {-p.y, p.x}; }

double sign(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

// Signed cosine between the two edges. Computed from the raw dot product so an
// exactly perpendicular pair yields exactly 0.
double signed_cos(Point a, Point b, Point c, Point d, double len_ab, double len_cd) {
  return dot(b - a, d - c) / (len_ab * len_cd);
}

}  // namespace

std::optional<ForceVector> spring_force(Point p_u, Point p_v, double k_s, double l) {
  const Point delta = p_u - p_v;
  const double d = norm(delta);
  if (d < kCoincidentDistance) return std::nullopt;
  return (k_s * (d - l) / d) * delta;
}

std::optional<ForceVector> repulsive_force(Point p_u, Point p_v, double k_r) {
  const Point delta = p_v - p_u;
  const double d = norm(delta);
  if (d < kCoincidentDistance) return std::nullopt;
  return (k_r / (d * d * d)) * delta;
}

double cosine_magnitude(double theta_deg, double k_cos) {
  if (theta_deg == 90.0) return 0.0;
  return k_cos * std::cos(theta_deg * std::numbers::pi / 180.0);
}

CrossingForces parallel_cosine(Point a, Point b, Point c, Point d, double k_cos) {
  const EdgeFrame ab = frame(a, b);
  const EdgeFrame cd = frame(c, d);
  if (!ab.ok || !cd.ok) return {};
  const double cs = k_cos * signed_cos(a, b, c, d, ab.len, cd.len);
  const ForceVector fa = cs * cd.dir;
  const ForceVector fc = cs * ab.dir;
  return {fa, -1.0 * fa, fc, -1.0 * fc};
}

CrossingForces rotational_cosine(Point a, Point b, Point c, Point d, double k_cos) {
  const EdgeFrame ab = frame(a, b);
  const EdgeFrame cd = frame(c, d);
  if (!ab.ok || !cd.ok) return {};
  const double cs = k_cos * signed_cos(a, b, c, d, ab.len, cd.len);
  const Point w_ab = perp(ab.dir);
  const Point w_cd = perp(cd.dir);
  // Rotate each edge so that its direction loses component along the other edge.
  const ForceVector fa = (cs * sign(dot(w_ab, cd.dir))) * w_ab;
  const ForceVector fc = (cs * sign(dot(w_cd, ab.dir))) * w_cd;
  return {fa, -1.0 * fa, fc, -1.0 * fc};
}

std::array<SplitForce, 4> attract_repel_components(Point a, Point b, Point c, Point d,
                                                   double k_cos) {
  const EdgeFrame ab = frame(a, b);
  const EdgeFrame cd = frame(c, d);
  if (!ab.ok || !cd.ok) return {};
  const double cs = signed_cos(a, b, c, d, ab.len, cd.len);
  const double mag = k_cos * std::abs(cs);
  if (mag == 0.0) return {};

  // For a properly crossing pair, a - X points along -(b - a), so a's obtuse side
  // on (c,d) is d when the edges point the same way (cs > 0) and c otherwise.
  // Symmetric reasoning gives the targets for b, c and d.
  const bool same = cs > 0;
  const Point a_target = same ? d : c, a_other = same ? c : d;
  const Point b_target = same ? c : d, b_other = same ? d : c;
  const Point c_target = same ? b : a, c_other = same ? a : b;
  const Point d_target = same ? a : b, d_other = same ? b : a;

  auto split = [mag](Point self, Point target, Point other) {
    return SplitForce{toward(self, target, mag), toward(other, self, mag)};
  };
  return {split(a, a_target, a_other), split(b, b_target, b_other), split(c, c_target, c_other),
          split(d, d_target, d_other)};
}

CrossingForces attract_repel_cosine(Point a, Point b, Point c, Point d, double k_cos) {
  const auto parts = attract_repel_components(a, b, c, d, k_cos);
  auto net = [](const SplitForce& s) { return s.attract + s.repel; };
  return {net(parts[0]), net(parts[1]), net(parts[2]), net(parts[3])};
}

CrossingForces cosine_forces(Variant variant, Point a, Point b, Point c, Point d, double k_cos) {
  switch (variant) {
    case Variant::parallel: return parallel_cosine(a, b, c, d, k_cos);
    case Variant::rotational: return rotational_cosine(a, b, c, d, k_cos);
    case Variant::attract_repel: return attract_repel_cosine(a, b, c, d, k_cos);
    case Variant::classical: break;
  }
  return {};
}

}  // namespace bigcross
