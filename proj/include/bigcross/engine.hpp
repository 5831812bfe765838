#pragma once

#include <cstdint>
#include <vector>

#include "bigcross/crossings.hpp"
#include "bigcross/forces.hpp"
#include "bigcross/graph.hpp"

namespace bigcross {

/// n positions drawn i.i.d. uniform in the unit square from a seeded generator.
Layout initial_placement(std::size_t n, std::uint64_t seed);

/// Net force on every vertex: springs along edges, repulsion between all pairs,
/// and (unless the variant is classical) the cosine force from each crossing on
/// its four endpoints. `crossings` must come from `layout`.
///
/// Coincident vertex pairs contribute no spring/repulsion; instead the higher
/// id receives a force that moves it 1e-6 in a direction hashed from the pair.
std::vector<ForceVector> total_force(const Graph& g, const Layout& layout, const LayoutParams& params,
                                     const std::vector<Crossing>& crossings);

struct StepResult {
  Layout layout;
  double max_move_x = 0.0;
  double max_move_y = 0.0;
};

/// One Jacobi update: every vertex moves by step * F(v), its length capped at
/// max_disp. Throws std::runtime_error if a force is not finite.
StepResult step(const Graph& g, const Layout& layout, const LayoutParams& params);

struct RunResult {
  Layout final;
  long iterations = 0;
  bool converged = false;
  double wall_time = 0.0;  // seconds
};

/// Iterates from `initial` until the largest per-axis move is within
/// move_threshold on both axes, or max_iterations steps have been taken.
RunResult run_from(const Graph& g, const Layout& initial, const LayoutParams& params);

/// run_from(g, initial_placement(n, seed), params).
RunResult run(const Graph& g, const LayoutParams& params, std::uint64_t seed);

}  // namespace bigcross
