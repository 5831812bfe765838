#pragma once

#include <cstdint>
#include <string>

#include "bigcross/graph.hpp"

namespace bigcross {

/// Rejection sampling for connectivity gives up after this many draws.
inline constexpr int kMaxConnectAttempts = 100000;

class GenerationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Uniform simple graph with exactly m edges, conditioned on being connected.
/// Requires n-1 <= m <= min(3n, n(n-1)/2).
Graph gen_erdos_renyi(std::size_t n, std::size_t m, std::uint64_t seed);

/// Ring lattice where each vertex links to its k nearest neighbours, each edge
/// rewired with probability p to a uniformly chosen non-neighbour. Resampled
/// until connected. k must be even, 0 < k < n.
Graph gen_watts_strogatz(std::size_t n, std::size_t k, double p, std::uint64_t seed);

/// Steady-state edge-rewiring process on n vertices: starting from a uniform
/// m-edge graph, each step takes a uniformly random vertex, detaches one of its
/// edges at random, and reattaches it between a uniform vertex and a
/// degree-proportional vertex. High-degree vertices keep gaining edges, giving a
/// skewed degree distribution. The process strands low-degree vertices, so the
/// result is the largest connected component (at most n vertices), redrawn if
/// it breaks |E| <= 3|V|.
Graph gen_eppstein_wang(std::size_t n, std::size_t m, std::size_t steps, std::uint64_t seed);

/// Random maximal planar graph built by inserting vertices into uniformly chosen
/// faces of a triangulation, thinned to m edges by deleting random non-bridge
/// edges. Vertex ids are randomly permuted. Requires n >= 3 and n-1 <= m <= 3n-6.
Graph gen_random_planar(std::size_t n, std::size_t m, std::uint64_t seed);

/// Hard-coded structured graphs: cycle, path, star, tree (complete binary),
/// dodecahedron, icosahedron, triangulated_triangle. `size` selects the vertex
/// count for cycle/path/star/tree and the side length for triangulated_triangle;
/// 0 picks the default. Unknown names throw GenerationError.
Graph classic(const std::string& name, std::size_t size = 0);

enum class Model { erdos_renyi, watts_strogatz, eppstein_wang, random_planar, classic };

std::string to_string(Model m);
/// Accepts the hyphenated CLI names ("erdos-renyi", ...) and the underscored ones.
Model parse_model(const std::string& s);

/// Everything needed to regenerate one graph. Fields a model does not use are
/// ignored; steps == 0 means 10 * n for the Eppstein-Wang process.
struct GenSpec {
  Model model = Model::erdos_renyi;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 4;
  double p = 0.1;
  std::size_t steps = 0;
  std::string name;  // classic graphs only
  std::uint64_t seed = 0;

  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

Graph generate(const GenSpec& spec);

}  // namespace bigcross
