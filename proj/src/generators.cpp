#include "bigcross/generators.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

namespace bigcross {

namespace {

using Pairs = std::vector<std::pair<VertexId, VertexId>>;

// Dense adjacency bitmap with an edge list view, for the mutation-heavy models.
class EdgeSet {
 public:
  explicit EdgeSet(std::size_t n) : n_(n), adj_(n * n, 0) {}

  bool has(VertexId u, VertexId v) const { return adj_[u * n_ + v] != 0; }
  void add(VertexId u, VertexId v) {
    adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
    ++count_;
  }
  void remove(VertexId u, VertexId v) {
    adj_[u * n_ + v] = adj_[v * n_ + u] = 0;
    --count_;
  }
  std::size_t size() const { return count_; }

  Pairs pairs() const {
    Pairs out;
    for (VertexId u = 0; u < n_; ++u)
      for (VertexId v = u + 1; v < n_; ++v)
        if (has(u, v)) out.emplace_back(u, v);
    return out;
  }

 private:
  std::size_t n_;
  std::vector<char> adj_;
  std::size_t count_ = 0;
};

VertexId uniform_vertex(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<VertexId>(0, n - 1)(rng);
}

// m distinct uniformly random pairs.
EdgeSet sample_edges(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  EdgeSet es(n);
  while (es.size() < m) {
    VertexId u = uniform_vertex(rng, n);
    VertexId v = uniform_vertex(rng, n);
    if (u != v && !es.has(u, v)) es.add(u, v);
  }
  return es;
}

template <class Draw>
Graph sample_connected(const char* model, Draw draw) {
  for (int attempt = 0; attempt < kMaxConnectAttempts; ++attempt) {
    Graph g = draw();
    if (is_connected(g)) return g;
  }
  throw GenerationError(std::string(model) + ": no connected sample within the attempt limit");
}

// Largest connected component (ties broken by smallest vertex id), with
// vertices renumbered in their original order.
Graph largest_component(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> comp(n, n);
  std::size_t best = 0, best_size = 0, next = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    std::vector<VertexId> stack{s};
    comp[s] = next;
    std::size_t size = 0;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      ++size;
      for (VertexId w : g.neighbors(v))
        if (comp[w] == n) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    if (size > best_size) {
      best_size = size;
      best = next;
    }
    ++next;
  }
  std::vector<VertexId> id(n, n);
  std::size_t k = 0;
  for (VertexId v = 0; v < n; ++v)
    if (comp[v] == best) id[v] = k++;
  Pairs out;
  for (const Edge& e : g.edges())
    if (comp[e.u] == best) out.emplace_back(id[e.u], id[e.v]);
  return make_graph(k, out);
}

}  // namespace

Graph gen_erdos_renyi(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n == 0) throw GenerationError("erdos-renyi: n must be positive");
  const std::size_t max_pairs = n * (n - 1) / 2;
  if (m + 1 < n || m > 3 * n || m > max_pairs)
    throw GenerationError("erdos-renyi: need n-1 <= m <= min(3n, n(n-1)/2)");
  std::mt19937_64 rng(seed);
  return sample_connected("erdos-renyi", [&] { return make_graph(n, sample_edges(n, m, rng).pairs()); });
}

Graph gen_watts_strogatz(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
  if (k == 0 || k % 2 != 0 || k >= n) throw GenerationError("watts-strogatz: k must be even with 0 < k < n");
  if (!(p >= 0.0 && p <= 1.0)) throw GenerationError("watts-strogatz: p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  return sample_connected("watts-strogatz", [&] {
    EdgeSet es(n);
    for (VertexId i = 0; i < n; ++i)
      for (std::size_t j = 1; j <= k / 2; ++j) es.add(i, (i + j) % n);

    std::vector<VertexId> candidates;
    for (std::size_t j = 1; j <= k / 2; ++j) {
      for (VertexId i = 0; i < n; ++i) {
        const VertexId t = (i + j) % n;
        if (!es.has(i, t) || coin(rng) >= p) continue;
        candidates.clear();
        for (VertexId w = 0; w < n; ++w)
          if (w != i && !es.has(i, w)) candidates.push_back(w);
        if (candidates.empty()) continue;
        const VertexId w = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
        es.remove(i, t);
        es.add(i, w);
      }
    }
    return make_graph(n, es.pairs());
  });
}

Graph gen_eppstein_wang(std::size_t n, std::size_t m, std::size_t steps, std::uint64_t seed) {
  if (n < 2) throw GenerationError("eppstein-wang: n must be at least 2");
  const std::size_t max_pairs = n * (n - 1) / 2;
  if (m + 1 < n || m > 3 * n || m > max_pairs)
    throw GenerationError("eppstein-wang: need n-1 <= m <= min(3n, n(n-1)/2)");
  std::mt19937_64 rng(seed);

  for (int attempt = 0; attempt < kMaxConnectAttempts; ++attempt) {
    EdgeSet es = sample_edges(n, m, rng);
    // Edge list mirrors the bitmap; a random entry with a random side is a
    // degree-proportional vertex.
    Pairs edges = es.pairs();
    std::vector<std::vector<std::size_t>> incident(n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      incident[edges[e].first].push_back(e);
      incident[edges[e].second].push_back(e);
    }
    auto detach = [&](std::size_t e, VertexId v) {
      auto& inc = incident[v];
      inc.erase(std::find(inc.begin(), inc.end(), e));
    };

    for (std::size_t s = 0; s < steps; ++s) {
      const VertexId v = uniform_vertex(rng, n);
      if (incident[v].empty()) continue;
      const std::size_t e = incident[v][std::uniform_int_distribution<std::size_t>(0, incident[v].size() - 1)(rng)];
      const VertexId x = uniform_vertex(rng, n);
      const auto& pick = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
      const VertexId y = (rng() & 1) ? pick.first : pick.second;
      if (x == y || es.has(x, y)) continue;

      auto [a, b] = edges[e];
      es.remove(a, b);
      detach(e, a);
      detach(e, b);
      es.add(x, y);
      edges[e] = {std::min(x, y), std::max(x, y)};
      incident[x].push_back(e);
      incident[y].push_back(e);
    }

    // The steady state routinely strands low-degree vertices, so keep the
    // largest component rather than rejecting the whole draw.
    Graph g = largest_component(make_graph(n, es.pairs()));
    if (g.vertex_count() >= 2 && g.edge_count() <= 3 * g.vertex_count()) return g;
  }
  throw GenerationError("eppstein-wang: no usable sample within the attempt limit");
}

Graph gen_random_planar(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 3) throw GenerationError("random-planar: n must be at least 3");
  if (m + 1 < n || m > 3 * n - 6) throw GenerationError("random-planar: need n-1 <= m <= 3n-6");
  std::mt19937_64 rng(seed);

  // Incremental triangulation. The outer face of the seed triangle is kept as
  // an ordinary face, so every face is a triangle throughout.
  std::vector<std::array<VertexId, 3>> faces{{0, 1, 2}, {0, 1, 2}};
  Pairs edges{{0, 1}, {1, 2}, {0, 2}};
  for (VertexId v = 3; v < n; ++v) {
    const std::size_t f = std::uniform_int_distribution<std::size_t>(0, faces.size() - 1)(rng);
    const auto [a, b, c] = faces[f];
    edges.emplace_back(a, v);
    edges.emplace_back(b, v);
    edges.emplace_back(c, v);
    faces[f] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({a, c, v});
  }

  // Thin to m edges. An edge that is a bridge stays one after later deletions,
  // so a single pass over a random order always reaches n-1.
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<char> keep(edges.size(), 1);
  std::size_t remaining = edges.size();
  for (std::size_t i = 0; i < edges.size() && remaining > m; ++i) {
    keep[i] = 0;
    Pairs trial;
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (keep[j]) trial.push_back(edges[j]);
    if (is_connected(make_graph(n, trial)))
      --remaining;
    else
      keep[i] = 1;
  }

  std::vector<VertexId> relabel(n);
  for (VertexId v = 0; v < n; ++v) relabel[v] = v;
  std::shuffle(relabel.begin(), relabel.end(), rng);
  Pairs out;
  for (std::size_t j = 0; j < edges.size(); ++j)
    if (keep[j]) out.emplace_back(relabel[edges[j].first], relabel[edges[j].second]);
  return make_graph(n, out);
}

namespace {

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw GenerationError("cycle needs at least 3 vertices");
  Pairs e;
  for (VertexId i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return make_graph(n, e);
}

Graph path_graph(std::size_t n) {
  if (n < 1) throw GenerationError("path needs at least 1 vertex");
  Pairs e;
  for (VertexId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, e);
}

Graph star_graph(std::size_t n) {
  if (n < 2) throw GenerationError("star needs at least 2 vertices");
  Pairs e;
  for (VertexId i = 1; i < n; ++i) e.emplace_back(0, i);
  return make_graph(n, e);
}

Graph binary_tree(std::size_t n) {
  Pairs e;
  for (VertexId i = 1; i < n; ++i) e.emplace_back((i - 1) / 2, i);
  return make_graph(n, e);
}

// Hamiltonian cycle plus chords given in LCF notation.
Graph lcf_graph(std::size_t n, const std::vector<int>& shifts) {
  std::set<std::pair<VertexId, VertexId>> e;
  auto add = [&](VertexId a, VertexId b) { e.insert({std::min(a, b), std::max(a, b)}); };
  for (VertexId i = 0; i < n; ++i) {
    add(i, (i + 1) % n);
    const long j = (static_cast<long>(i) + shifts[i % shifts.size()] + static_cast<long>(n)) % static_cast<long>(n);
    add(i, static_cast<VertexId>(j));
  }
  return make_graph(n, Pairs(e.begin(), e.end()));
}

Graph icosahedron() {
  return make_graph(12, {{0, 1}, {0, 5}, {0, 7}, {0, 8}, {0, 11}, {1, 2}, {1, 5}, {1, 6}, {1, 8}, {2, 3},
                         {2, 6}, {2, 8}, {2, 9}, {3, 4}, {3, 6}, {3, 9}, {3, 10}, {4, 5}, {4, 6}, {4, 10},
                         {4, 11}, {5, 6}, {5, 11}, {7, 8}, {7, 9}, {7, 10}, {7, 11}, {8, 9}, {9, 10}, {10, 11}});
}

Graph triangulated_triangle(std::size_t side) {
  if (side < 1) throw GenerationError("triangulated_triangle needs side >= 1");
  auto id = [](std::size_t row, std::size_t col) { return row * (row + 1) / 2 + col; };
  Pairs e;
  for (std::size_t r = 0; r <= side; ++r) {
    for (std::size_t c = 0; c <= r; ++c) {
      if (c < r) e.emplace_back(id(r, c), id(r, c + 1));
      if (r < side) {
        e.emplace_back(id(r, c), id(r + 1, c));
        e.emplace_back(id(r, c), id(r + 1, c + 1));
      }
    }
  }
  return make_graph(id(side + 1, 0), e);
}

}  // namespace

Graph classic(const std::string& name, std::size_t size) {
  if (name == "cycle") return cycle_graph(size ? size : 6);
  if (name == "path") return path_graph(size ? size : 5);
  if (name == "star") return star_graph(size ? size : 4);
  if (name == "tree") return binary_tree(size ? size : 15);
  if (name == "dodecahedron") return lcf_graph(20, {10, 7, 4, -4, -7, 10, -4, 7, -7, 4});
  if (name == "icosahedron") return icosahedron();
  if (name == "triangulated_triangle" || name == "triangulated-triangle")
    return triangulated_triangle(size ? size : 4);
  throw GenerationError("unknown classic graph '" + name + "'");
}

std::string to_string(Model m) {
  switch (m) {
    case Model::erdos_renyi: return "erdos-renyi";
    case Model::watts_strogatz: return "watts-strogatz";
    case Model::eppstein_wang: return "eppstein-wang";
    case Model::random_planar: return "random-planar";
    case Model::classic: return "classic";
  }
  return "unknown";
}

Model parse_model(const std::string& s) {
  std::string t = s;
  std::replace(t.begin(), t.end(), '_', '-');
  for (Model m : {Model::erdos_renyi, Model::watts_strogatz, Model::eppstein_wang, Model::random_planar,
                  Model::classic})
    if (t == to_string(m)) return m;
  throw GenerationError("unknown model '" + s + "'");
}

Graph generate(const GenSpec& spec) {
  switch (spec.model) {
    case Model::erdos_renyi: return gen_erdos_renyi(spec.n, spec.m, spec.seed);
    case Model::watts_strogatz: return gen_watts_strogatz(spec.n, spec.k, spec.p, spec.seed);
    case Model::eppstein_wang:
      return gen_eppstein_wang(spec.n, spec.m, spec.steps ? spec.steps : 10 * spec.n, spec.seed);
    case Model::random_planar: return gen_random_planar(spec.n, spec.m, spec.seed);
    case Model::classic: return classic(spec.name, spec.n);
  }
  throw GenerationError("unknown model");
}

}  // namespace bigcross
