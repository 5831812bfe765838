#pragma once

#include <array>
#include <optional>

#include "bigcross/graph.hpp"

namespace bigcross {

using ForceVector = Point;

/// Forces on the four endpoints of a crossing pair of edges (a,b) x (c,d).
struct CrossingForces {
  ForceVector on_a, on_b, on_c, on_d;
};

/// Below this separation two vertices are treated as coincident.
inline constexpr double kCoincidentDistance = 1e-9;
/// Unit-vector normalizations below this length produce zero force.
inline constexpr double kNormalizeGuard = 1e-12;

/// Hooke spring along edge (u,v), force acting on v: magnitude k_s(d - l),
/// toward u when stretched. nullopt when the vertices coincide.
std::optional<ForceVector> spring_force(Point p_u, Point p_v, double k_s, double l);

/// Inverse-square repulsion k_r / d^2 acting on v, directed away from u.
/// nullopt when the vertices coincide.
std::optional<ForceVector> repulsive_force(Point p_u, Point p_v, double k_r);

/// k_cos * cos(theta), theta in degrees.
double cosine_magnitude(double theta_deg, double k_cos);

// Cosine-force kernels. Each expects (a,b) and (c,d) to cross properly and
// returns zero forces for zero-length edges. All three push the crossing toward
// a right angle to first order.

/// Each endpoint is pushed along the other edge's direction.
CrossingForces parallel_cosine(Point a, Point b, Point c, Point d, double k_cos);

/// Each endpoint is pushed perpendicular to its own edge, rotating the edge.
CrossingForces rotational_cosine(Point a, Point b, Point c, Point d, double k_cos);

/// Attractive and repulsive parts of the attract/repel kernel for one endpoint.
struct SplitForce {
  ForceVector attract;
  ForceVector repel;
};

/// Per-endpoint components in order a, b, c, d. Each endpoint is attracted to the
/// far endpoint of the other edge that lies on its obtuse side of the crossing
/// point, and repelled from the other one.
std::array<SplitForce, 4> attract_repel_components(Point a, Point b, Point c, Point d, double k_cos);

CrossingForces attract_repel_cosine(Point a, Point b, Point c, Point d, double k_cos);

/// Dispatches on variant; classical yields zero forces.
CrossingForces cosine_forces(Variant variant, Point a, Point b, Point c, Point d, double k_cos);

}  // namespace bigcross
