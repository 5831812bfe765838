#pragma once

#include "bigcross/graph.hpp"

namespace bigcross {

/// Reported when no vertex has two incident edges.
inline constexpr double kUndefinedAngularResolution = 360.0;

struct AngularResolution {
  double degrees = kUndefinedAngularResolution;
  bool defined = false;
};

/// Aesthetic measures of one drawing. With no crossings, angle_mean and
/// angle_stddev are 0. Standard deviations are population (divide by N).
struct MetricsReport {
  long crossings = 0;
  double angle_mean = 0.0;
  double angle_stddev = 0.0;
  double edge_len_mean = 0.0;
  double edge_len_stddev = 0.0;
  double angular_resolution = kUndefinedAngularResolution;
  bool angular_resolution_defined = false;

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

/// Smallest angle between consecutive incident edges, minimized over vertices
/// of degree >= 2. Zero-length edges have no direction and are skipped.
AngularResolution angular_resolution(const Graph& g, const Layout& layout);

MetricsReport measure(const Graph& g, const Layout& layout);

}  // namespace bigcross
