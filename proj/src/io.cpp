#include "bigcross/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace bigcross {

using nlohmann::json;

void write_edge_list(std::ostream& os, const Graph& g) {
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

Graph read_edge_list(std::istream& is) {
  long long n = -1, m = -1;
  if (!(is >> n >> m) || n < 0 || m < 0) throw DataError("edge list: expected header 'n m'");
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = -1, v = -1;
    if (!(is >> u >> v)) throw DataError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    if (u < 0 || v < 0) throw DataError("edge list: negative vertex id");
    pairs.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  std::string extra;
  if (is >> extra) throw DataError("edge list: trailing data after " + std::to_string(m) + " edges");
  try {
    return make_graph(static_cast<std::size_t>(n), pairs);
  } catch (const GraphError& e) {
    throw DataError(std::string("edge list: ") + e.what());
  }
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  return read_edge_list(in);
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << text;
}

void write_edge_list_file(const std::filesystem::path& path, const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  write_text_file(path, os.str());
}

json params_to_json(const LayoutParams& p) {
  return json{{"k_s", p.k_s},
              {"k_r", p.k_r},
              {"k_cos", p.k_cos},
              {"l", p.l},
              {"variant", to_string(p.variant)},
              {"step", p.step},
              {"max_disp", p.max_disp},
              {"move_threshold", p.move_threshold},
              {"max_iterations", p.max_iterations}};
}

LayoutParams params_from_json(const json& j) {
  LayoutParams p;
  p.k_s = j.at("k_s").get<double>();
  p.k_r = j.at("k_r").get<double>();
  p.k_cos = j.at("k_cos").get<double>();
  p.l = j.at("l").get<double>();
  p.variant = parse_variant(j.at("variant").get<std::string>());
  p.step = j.at("step").get<double>();
  p.max_disp = j.at("max_disp").get<double>();
  p.move_threshold = j.at("move_threshold").get<double>();
  p.max_iterations = j.at("max_iterations").get<long>();
  return p;
}

json layout_to_json(const LayoutFile& f) {
  json positions = json::array();
  for (const Point& p : f.layout.positions()) positions.push_back({p.x, p.y});
  json j{{"n", f.layout.size()}, {"positions", positions}, {"seed", f.seed}, {"params", params_to_json(f.params)}};
  if (f.run) j["run"] = {{"algo", f.run->algo}, {"iterations", f.run->iterations}, {"converged", f.run->converged}};
  return j;
}

LayoutFile layout_from_json(const json& j) {
  try {
    LayoutFile f;
    const auto n = j.at("n").get<std::size_t>();
    const auto& pos = j.at("positions");
    if (!pos.is_array() || pos.size() != n)
      throw DataError("layout: positions length " + std::to_string(pos.size()) + " does not match n = " + std::to_string(n));
    std::vector<Point> pts;
    pts.reserve(n);
    for (const auto& p : pos) {
      if (!p.is_array() || p.size() != 2) throw DataError("layout: each position must be [x, y]");
      pts.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    f.layout = Layout(std::move(pts));
    f.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("params")) f.params = params_from_json(j.at("params"));
    if (j.contains("run")) {
      const auto& r = j.at("run");
      f.run = RunInfo{r.at("algo").get<std::string>(), r.at("iterations").get<long>(), r.at("converged").get<bool>()};
    }
    return f;
  } catch (const json::exception& e) {
    throw DataError(std::string("layout: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("layout: ") + e.what());
  }
}

LayoutFile read_layout_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DataError(path.string() + ": " + e.what());
  }
  return layout_from_json(j);
}

void write_layout_file(const std::filesystem::path& path, const LayoutFile& f) {
  write_text_file(path, layout_to_json(f).dump(2) + "\n");
}

json metrics_to_json(const MetricsReport& m) {
  return json{{"crossings", m.crossings},
              {"angle_mean", m.angle_mean},
              {"angle_stddev", m.angle_stddev},
              {"edge_len_mean", m.edge_len_mean},
              {"edge_len_stddev", m.edge_len_stddev},
              {"angular_resolution", m.angular_resolution},
              {"angular_resolution_defined", m.angular_resolution_defined}};
}

MetricsReport metrics_from_json(const json& j) {
  MetricsReport m;
  m.crossings = j.at("crossings").get<long>();
  m.angle_mean = j.at("angle_mean").get<double>();
  m.angle_stddev = j.at("angle_stddev").get<double>();
  m.edge_len_mean = j.at("edge_len_mean").get<double>();
  m.edge_len_stddev = j.at("edge_len_stddev").get<double>();
  m.angular_resolution = j.at("angular_resolution").get<double>();
  m.angular_resolution_defined = j.at("angular_resolution_defined").get<bool>();
  return m;
}

json crossings_to_json(const Graph& g, const std::vector<Crossing>& crossings) {
  json arr = json::array();
  for (const Crossing& c : crossings) {
    const Edge& a = g.edge(c.edge_a);
    const Edge& b = g.edge(c.edge_b);
    arr.push_back({{"edge_a", {a.u, a.v}}, {"edge_b", {b.u, b.v}}, {"point", {c.point.x, c.point.y}}, {"theta", c.theta}});
  }
  return arr;
}

json spec_to_json(const GenSpec& s) {
  json j{{"model", to_string(s.model)}, {"n", s.n}, {"seed", s.seed}};
  switch (s.model) {
    case Model::erdos_renyi:
    case Model::random_planar: j["m"] = s.m; break;
    case Model::watts_strogatz:
      j["m"] = s.m;
      j["k"] = s.k;
      j["p"] = s.p;
      break;
    case Model::eppstein_wang:
      j["m"] = s.m;
      j["steps"] = s.steps ? s.steps : 10 * s.n;
      break;
    case Model::classic: j["name"] = s.name; break;
  }
  if (s.model == Model::random_planar) j["source"] = "synthetic random triangulation, thinned";
  return j;
}

GenSpec spec_from_json(const json& j) {
  GenSpec s;
  s.model = parse_model(j.at("model").get<std::string>());
  s.n = j.at("n").get<std::size_t>();
  s.seed = j.at("seed").get<std::uint64_t>();
  s.m = j.value("m", std::size_t{0});
  s.k = j.value("k", std::size_t{4});
  s.p = j.value("p", 0.1);
  s.steps = j.value("steps", std::size_t{0});
  s.name = j.value("name", std::string{});
  return s;
}

json record_to_json(const BenchRecord& r, bool include_times) {
  json j{{"graph_spec", spec_to_json(r.graph_spec)},
         {"seed", r.seed},
         {"variant", r.variant},
         {"initial_metrics", metrics_to_json(r.initial_metrics)},
         {"classical_metrics", metrics_to_json(r.classical_metrics)},
         {"bigcross_metrics", metrics_to_json(r.bigcross_metrics)},
         {"classical_iters", r.classical_iters},
         {"bigcross_iters", r.bigcross_iters},
         {"classical_converged", r.classical_converged},
         {"bigcross_converged", r.bigcross_converged}};
  if (include_times) {
    j["classical_time"] = r.classical_time;
    j["bigcross_time"] = r.bigcross_time;
  }
  return j;
}

BenchRecord record_from_json(const json& j) {
  BenchRecord r;
  r.graph_spec = spec_from_json(j.at("graph_spec"));
  r.seed = j.at("seed").get<std::uint64_t>();
  r.variant = j.at("variant").get<std::string>();
  r.initial_metrics = metrics_from_json(j.at("initial_metrics"));
  r.classical_metrics = metrics_from_json(j.at("classical_metrics"));
  r.bigcross_metrics = metrics_from_json(j.at("bigcross_metrics"));
  r.classical_iters = j.at("classical_iters").get<long>();
  r.bigcross_iters = j.at("bigcross_iters").get<long>();
  r.classical_converged = j.at("classical_converged").get<bool>();
  r.bigcross_converged = j.at("bigcross_converged").get<bool>();
  r.classical_time = j.value("classical_time", 0.0);
  r.bigcross_time = j.value("bigcross_time", 0.0);
  return r;
}

void write_summary_csv(std::ostream& os, const BenchSummary& s) {
  os << "metric,median_bigcross,median_classical,median_diff,W,n_effective,p,method\n";
  std::ostringstream line;
  for (const auto& row : s.rows) {
    line.str("");
    line << std::setprecision(10) << row.metric << ',' << row.median_bigcross << ',' << row.median_classical << ','
         << row.median_diff << ',' << row.wilcoxon.w_statistic << ',' << row.wilcoxon.n_effective << ',';
    if (std::isnan(row.wilcoxon.p_value))
      line << "NA";
    else
      line << row.wilcoxon.p_value;
    line << ',' << to_string(row.wilcoxon.method) << '\n';
    os << line.str();
  }
}

}  // namespace bigcross
