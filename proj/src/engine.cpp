#include "bigcross/engine.hpp"

#include <chrono>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "bigcross/hash.hpp"

namespace bigcross {

namespace {

constexpr double kJitter = 1e-6;

ForceVector jitter_force(VertexId u, VertexId v, const LayoutParams& params) {
  const std::uint64_t h = mix_seed(u, v);
  const double angle = 2.0 * std::numbers::pi * (static_cast<double>(h >> 11) * 0x1.0p-53);
  // Scaled so that step * force has length kJitter.
  return (kJitter / params.step) * Point{std::cos(angle), std::sin(angle)};
}

}  // namespace

Layout initial_placement(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Point> pos(n);
  for (auto& p : pos) {
    p.x = unit(rng);
    p.y = unit(rng);
  }
  return Layout(std::move(pos));
}

std::vector<ForceVector> total_force(const Graph& g, const Layout& layout, const LayoutParams& params,
                                     const std::vector<Crossing>& crossings) {
  const std::size_t n = g.vertex_count();
  std::vector<ForceVector> force(n);

  for (const Edge& e : g.edges()) {
    if (auto f = spring_force(layout[e.u], layout[e.v], params.k_s, params.l)) {
      force[e.v] = force[e.v] + *f;
      force[e.u] = force[e.u] - *f;
    }
  }

  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (auto f = repulsive_force(layout[u], layout[v], params.k_r)) {
        force[v] = force[v] + *f;
        force[u] = force[u] - *f;
      } else {
        force[v] = force[v] + jitter_force(u, v, params);
      }
    }
  }

  if (params.variant != Variant::classical) {
    for (const Crossing& x : crossings) {
      const Edge& e1 = g.edge(x.edge_a);
      const Edge& e2 = g.edge(x.edge_b);
      const CrossingForces cf = cosine_forces(params.variant, layout[e1.u], layout[e1.v],
                                              layout[e2.u], layout[e2.v], params.k_cos);
      force[e1.u] = force[e1.u] + cf.on_a;
      force[e1.v] = force[e1.v] + cf.on_b;
      force[e2.u] = force[e2.u] + cf.on_c;
      force[e2.v] = force[e2.v] + cf.on_d;
    }
  }
  return force;
}

StepResult step(const Graph& g, const Layout& layout, const LayoutParams& params) {
  std::vector<Crossing> crossings;
  if (params.variant != Variant::classical) crossings = find_crossings(g, layout);
  const auto force = total_force(g, layout, params, crossings);

  StepResult out{layout, 0.0, 0.0};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!std::isfinite(force[v].x) || !std::isfinite(force[v].y))
      throw std::runtime_error("non-finite force on vertex " + std::to_string(v));
    Point delta = params.step * force[v];
    const double len = norm(delta);
    if (len > params.max_disp) delta = (params.max_disp / len) * delta;
    out.layout[v] = out.layout[v] + delta;
    out.max_move_x = std::max(out.max_move_x, std::abs(delta.x));
    out.max_move_y = std::max(out.max_move_y, std::abs(delta.y));
  }
  return out;
}

RunResult run_from(const Graph& g, const Layout& initial, const LayoutParams& params) {
  params.validate();
  if (initial.size() != g.vertex_count())
    throw std::invalid_argument("layout size does not match vertex count");

  const auto start = std::chrono::steady_clock::now();
  RunResult result{initial, 0, false, 0.0};
  while (result.iterations < params.max_iterations) {
    StepResult s = step(g, result.final, params);
    result.final = std::move(s.layout);
    ++result.iterations;
    if (s.max_move_x <= params.move_threshold && s.max_move_y <= params.move_threshold) {
      result.converged = true;
      break;
    }
  }
  result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

RunResult run(const Graph& g, const LayoutParams& params, std::uint64_t seed) {
  return run_from(g, initial_placement(g.vertex_count(), seed), params);
}

}  // namespace bigcross
