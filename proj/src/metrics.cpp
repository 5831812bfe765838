#include "bigcross/metrics.hpp"

#include <algorithm>
#include <numbers>
#include <vector>

#include "bigcross/crossings.hpp"
#include "bigcross/stats.hpp"

namespace bigcross {

AngularResolution angular_resolution(const Graph& g, const Layout& layout) {
  AngularResolution res;
  std::vector<double> dirs;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < 2) continue;
    dirs.clear();
    for (VertexId w : g.neighbors(v)) {
      const Point d = layout[w] - layout[v];
      if (d.x == 0.0 && d.y == 0.0) continue;
      dirs.push_back(std::atan2(d.y, d.x) * 180.0 / std::numbers::pi);
    }
    if (dirs.size() < 2) continue;
    std::sort(dirs.begin(), dirs.end());
    double best = 360.0 - (dirs.back() - dirs.front());
    for (std::size_t i = 1; i < dirs.size(); ++i) best = std::min(best, dirs[i] - dirs[i - 1]);
    if (!res.defined || best < res.degrees) res = {best, true};
  }
  return res;
}

MetricsReport measure(const Graph& g, const Layout& layout) {
  MetricsReport r;
  const auto crossings = find_crossings(g, layout);
  r.crossings = static_cast<long>(crossings.size());
  if (!crossings.empty()) {
    std::vector<double> thetas;
    thetas.reserve(crossings.size());
    for (const Crossing& c : crossings) thetas.push_back(c.theta);
    r.angle_mean = mean(thetas);
    r.angle_stddev = population_stddev(thetas);
  }

  if (g.edge_count() > 0) {
    std::vector<double> lengths;
    lengths.reserve(g.edge_count());
    for (const Edge& e : g.edges()) lengths.push_back(distance(layout[e.u], layout[e.v]));
    r.edge_len_mean = mean(lengths);
    r.edge_len_stddev = population_stddev(lengths);
  }

  const AngularResolution ar = angular_resolution(g, layout);
  r.angular_resolution = ar.degrees;
  r.angular_resolution_defined = ar.defined;
  return r;
}

}  // namespace bigcross
