#include "bigcross/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace bigcross {

namespace {

std::string edge_str(VertexId u, VertexId v) {
  std::ostringstream os;
  os << "(" << u << "," << v << ")";
  return os.str();
}

}  // namespace

Graph make_graph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  Graph g;
  g.n_ = n;
  g.edges_.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    if (u >= n || v >= n)
      throw GraphError("edge " + edge_str(u, v) + " references a vertex >= " + std::to_string(n));
    if (u == v) throw GraphError("self-loop " + edge_str(u, v));
    g.edges_.push_back(u < v ? Edge{u, v} : Edge{v, u});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) throw GraphError("duplicate edge " + edge_str(dup->u, dup->v));

  g.adjacency_.assign(n, {});
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u >= n_ || v >= n_) return false;
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<std::pair<VertexId, VertexId>> edge_pairs(const Graph& g) {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(g.edge_count());
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::queue<VertexId> q;
  q.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (VertexId w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  return reached == n;
}

Layout::Layout(std::vector<Point> positions) : positions_(std::move(positions)) {
  for (const Point& p : positions_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("layout contains a non-finite coordinate");
  }
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::classical: return "classical";
    case Variant::parallel: return "parallel";
    case Variant::rotational: return "rotational";
    case Variant::attract_repel: return "attract-repel";
  }
  return "unknown";
}

Variant parse_variant(const std::string& s) {
  if (s == "classical") return Variant::classical;
  if (s == "parallel") return Variant::parallel;
  if (s == "rotational") return Variant::rotational;
  if (s == "attract-repel" || s == "attract_repel") return Variant::attract_repel;
  throw std::invalid_argument("unknown variant '" + s + "'");
}

void LayoutParams::validate() const {
  // k_cos may be zero: that is the classical model run through the cosine path.
  if (!(k_s > 0) || !(k_r > 0) || !(l > 0) || !(k_cos >= 0))
    throw std::invalid_argument("force constants must be positive");
  if (!(step > 0) || !(max_disp > 0)) throw std::invalid_argument("step and max_disp must be positive");
  if (!(move_threshold > 0)) throw std::invalid_argument("move_threshold must be positive");
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
}

}  // namespace bigcross
