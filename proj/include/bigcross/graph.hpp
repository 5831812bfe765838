#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bigcross {

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point, Point) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }

/// Euclidean distance between two positions.
inline double distance(Point u, Point v) { return norm(v - u); }

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored canonically (u < v) in sorted order, so two graphs with the
/// same edge set compare equal regardless of the order they were built in.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  /// Neighbors of v in ascending order.
  const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  bool has_edge(VertexId u, VertexId v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend Graph make_graph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges);

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
};

/// Builds a graph, rejecting self-loops, duplicate edges and out-of-range ids.
/// Throws GraphError naming the offending edge.
Graph make_graph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges);

/// Same edge set, as plain pairs (u < v).
std::vector<std::pair<VertexId, VertexId>> edge_pairs(const Graph& g);

bool is_connected(const Graph& g);

/// Per-vertex positions. Size always equals the vertex count of the graph it draws.
class Layout {
 public:
  Layout() = default;
  explicit Layout(std::vector<Point> positions);

  std::size_t size() const { return positions_.size(); }
  const Point& operator[](VertexId v) const { return positions_[v]; }
  Point& operator[](VertexId v) { return positions_[v]; }
  const std::vector<Point>& positions() const { return positions_; }

  friend bool operator==(const Layout&, const Layout&) = default;

 private:
  std::vector<Point> positions_;
};

enum class Variant { classical, parallel, rotational, attract_repel };

std::string to_string(Variant v);
/// Accepts "classical", "parallel", "rotational", "attract-repel" / "attract_repel".
Variant parse_variant(const std::string& s);

struct LayoutParams {
  double k_s = 1.0;
  double k_r = 1.0;
  double k_cos = 1.0;
  double l = 1.0;
  Variant variant = Variant::parallel;
  double step = 0.01;
  double max_disp = 0.5;
  double move_threshold = 0.0005;
  long max_iterations = 80000;

  /// Tighter convergence used for small structured graphs.
  static LayoutParams high_quality() {
    LayoutParams p;
    p.move_threshold = 0.00001;
    p.max_iterations = 100000;
    return p;
  }

  /// Throws std::invalid_argument on a non-positive constant or iteration cap.
  void validate() const;
};

}  // namespace bigcross
