#include "bigcross/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "bigcross/bench.hpp"
#include "bigcross/engine.hpp"
#include "bigcross/generators.hpp"
#include "bigcross/io.hpp"
#include "bigcross/metrics.hpp"
#include "bigcross/svg.hpp"

namespace bigcross {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenerateOpts {
  std::string model;
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  std::size_t k = 4;
  double p = 0.1;
  std::size_t steps = 0;
  std::string name;
  std::uint64_t seed = 0;
  std::string out;
};

struct LayoutOpts {
  std::string in;
  std::string algo = "bigcross";
  std::string variant = "parallel";
  std::uint64_t seed = 0;
  std::string preset = "default";
  std::optional<double> k_cos;
  std::string out;
  std::string svg;
};

struct MeasureOpts {
  std::string graph;
  std::string layout;
  bool crossings = false;
};

struct BenchOpts {
  std::string models = "erdos-renyi";
  std::size_t count = 0;
  std::uint64_t master_seed = 0;
  std::string outdir;
  std::string variant = "parallel";
  std::string preset = "default";
  unsigned threads = 1;
  bool record_times = false;
};

struct RenderOpts {
  std::string graph;
  std::string layout;
  std::string out;
  bool annotate = false;
};

LayoutParams preset_params(const std::string& preset) {
  if (preset == "default") return LayoutParams{};
  if (preset == "high-quality") return LayoutParams::high_quality();
  throw UsageError("unknown preset '" + preset + "'");
}

Variant variant_flag(const std::string& s) {
  try {
    const Variant v = parse_variant(s);
    if (v == Variant::classical) throw UsageError("--variant selects a cosine variant; use --algo classical instead");
    return v;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_generate(const GenerateOpts& o, std::ostream& out) {
  GenSpec spec;
  try {
    spec.model = parse_model(o.model);
  } catch (const GenerationError& e) {
    throw UsageError(e.what());
  }
  spec.seed = o.seed;
  spec.k = o.k;
  spec.p = o.p;
  spec.steps = o.steps;
  spec.name = o.name;
  if (spec.model == Model::classic) {
    if (o.name.empty()) throw UsageError("--name is required for --model classic");
    spec.n = o.n.value_or(0);
  } else {
    if (!o.n) throw UsageError("--n is required for random models");
    spec.n = *o.n;
    if (spec.model != Model::watts_strogatz) {
      if (!o.m) throw UsageError("--m is required for --model " + o.model);
      spec.m = *o.m;
    }
  }
  Graph g;
  try {
    g = generate(spec);
  } catch (const GenerationError& e) {
    throw UsageError(e.what());
  }
  if (spec.model == Model::classic) spec.n = g.vertex_count();
  if (spec.model == Model::watts_strogatz) spec.m = g.edge_count();
  write_edge_list_file(o.out, g);
  json meta = spec_to_json(spec);
  meta["vertices"] = g.vertex_count();
  meta["edges"] = g.edge_count();
  out << meta.dump() << '\n';
  return kExitOk;
}

int cmd_layout(const LayoutOpts& o, std::ostream& out) {
  LayoutParams params = preset_params(o.preset);
  if (o.algo == "classical") {
    params.variant = Variant::classical;
  } else if (o.algo == "bigcross") {
    params.variant = variant_flag(o.variant);
  } else {
    throw UsageError("--algo must be classical or bigcross");
  }
  if (o.k_cos) {
    if (*o.k_cos < 0) throw UsageError("--k-cos must be non-negative");
    params.k_cos = *o.k_cos;
  }

  const Graph g = read_edge_list_file(o.in);
  const RunResult r = run(g, params, o.seed);
  write_layout_file(o.out, LayoutFile{r.final, o.seed, params, RunInfo{o.algo, r.iterations, r.converged}});
  if (!o.svg.empty()) {
    std::ostringstream svg;
    render_svg(svg, g, r.final);
    write_text_file(o.svg, svg.str());
  }
  out << o.algo << ": " << r.iterations << " iterations, " << (r.converged ? "converged" : "iteration cap reached")
      << ", " << std::fixed << std::setprecision(3) << r.wall_time << " s\n";
  return kExitOk;
}

std::pair<Graph, LayoutFile> load_drawing(const std::string& graph_path, const std::string& layout_path) {
  Graph g = read_edge_list_file(graph_path);
  LayoutFile f = read_layout_file(layout_path);
  if (f.layout.size() != g.vertex_count())
    throw DataError("layout has " + std::to_string(f.layout.size()) + " positions but the graph has " +
                    std::to_string(g.vertex_count()) + " vertices");
  return {std::move(g), std::move(f)};
}

int cmd_measure(const MeasureOpts& o, std::ostream& out) {
  auto [g, f] = load_drawing(o.graph, o.layout);
  json j = metrics_to_json(measure(g, f.layout));
  if (o.crossings) j["crossing_list"] = crossings_to_json(g, find_crossings(g, f.layout));
  out << j.dump(2) << '\n';
  return kExitOk;
}

void print_summary(std::ostream& out, const std::string& model, const BenchSummary& s) {
  out << model << " (" << s.records << " graphs)\n";
  out << std::left << std::setw(20) << "metric" << std::right << std::setw(12) << "BIGCROSS" << std::setw(12)
      << "classical" << std::setw(12) << "diff" << std::setw(12) << "p" << '\n';
  for (const auto& row : s.rows) {
    out << std::left << std::setw(20) << row.metric << std::right << std::fixed << std::setprecision(2)
        << std::setw(12) << row.median_bigcross << std::setw(12) << row.median_classical << std::setw(12)
        << row.median_diff << std::setw(12);
    if (row.wilcoxon.degenerate())
      out << "-";
    else
      out << std::setprecision(4) << row.wilcoxon.p_value;
    out << '\n' << std::defaultfloat;
  }
}

int cmd_bench(const BenchOpts& o, std::ostream& out) {
  if (o.count < kMinSummaryRecords)
    throw UsageError("--count must be at least " + std::to_string(kMinSummaryRecords) + " for a paired test");
  LayoutParams params = preset_params(o.preset);
  params.variant = variant_flag(o.variant);

  std::vector<Model> models;
  std::stringstream ss(o.models);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      const Model m = parse_model(item);
      if (m == Model::classic) throw UsageError("classic graphs cannot be benchmarked by sampling");
      models.push_back(m);
    } catch (const GenerationError& e) {
      throw UsageError(e.what());
    }
  }
  if (models.empty()) throw UsageError("--models is empty");

  const fs::path outdir(o.outdir);
  fs::create_directories(outdir / "records");
  for (Model model : models) {
    const auto specs = bench_specs(model, o.count, o.master_seed);
    const auto records = run_bench(specs, params, o.threads);
    for (std::size_t i = 0; i < records.size(); ++i) {
      std::ostringstream name;
      name << to_string(model) << '_' << std::setw(4) << std::setfill('0') << i << ".json";
      write_text_file(outdir / "records" / name.str(), record_to_json(records[i], o.record_times).dump(2) + "\n");
    }
    const BenchSummary summary = summarize(records);
    std::ostringstream csv;
    write_summary_csv(csv, summary);
    write_text_file(outdir / ("summary_" + to_string(model) + ".csv"), csv.str());
    print_summary(out, to_string(model), summary);
  }
  return kExitOk;
}

int cmd_render(const RenderOpts& o, std::ostream& out) {
  auto [g, f] = load_drawing(o.graph, o.layout);
  std::ostringstream svg;
  render_svg(svg, g, f.layout, SvgOptions{600.0, o.annotate});
  write_text_file(o.out, svg.str());
  out << "wrote " << o.out << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Force-directed graph layout with crossing-angle maximization", "bigcross"};
  app.require_subcommand(1);

  GenerateOpts gen;
  auto* generate = app.add_subcommand("generate", "Generate a graph as an edge list");
  generate->add_option("--model", gen.model, "erdos-renyi | watts-strogatz | eppstein-wang | random-planar | classic")
      ->required();
  generate->add_option("--n", gen.n, "Vertex count (size for classic graphs)");
  generate->add_option("--m", gen.m, "Edge count");
  generate->add_option("--k", gen.k, "Watts-Strogatz ring degree")->capture_default_str();
  generate->add_option("--p", gen.p, "Watts-Strogatz rewiring probability")->capture_default_str();
  generate->add_option("--steps", gen.steps, "Eppstein-Wang mixing steps (0 = 10n)")->capture_default_str();
  generate->add_option("--name", gen.name, "Classic graph name");
  generate->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  generate->add_option("--out", gen.out, "Output edge list")->required();

  LayoutOpts lay;
  auto* layout = app.add_subcommand("layout", "Run the layout engine on an edge list");
  layout->add_option("--in", lay.in, "Input edge list")->required();
  layout->add_option("--algo", lay.algo, "classical | bigcross")->capture_default_str();
  layout->add_option("--variant", lay.variant, "parallel | rotational | attract-repel")->capture_default_str();
  layout->add_option("--seed", lay.seed, "Initial placement seed")->capture_default_str();
  layout->add_option("--preset", lay.preset, "default | high-quality")->capture_default_str();
  layout->add_option("--k-cos", lay.k_cos, "Override the cosine constant");
  layout->add_option("--out", lay.out, "Output layout JSON")->required();
  layout->add_option("--svg", lay.svg, "Also render the final layout to this SVG file");

  MeasureOpts mea;
  auto* meas = app.add_subcommand("measure", "Print the aesthetic metrics of a drawing as JSON");
  meas->add_option("--graph", mea.graph, "Edge list")->required();
  meas->add_option("--layout", mea.layout, "Layout JSON")->required();
  meas->add_flag("--crossings", mea.crossings, "Include the list of crossings");

  BenchOpts ben;
  auto* bench = app.add_subcommand("bench", "Paired classical vs BIGCROSS experiment");
  bench->add_option("--models", ben.models, "Comma-separated model list")->capture_default_str();
  bench->add_option("--count", ben.count, "Graphs per model")->required();
  bench->add_option("--master-seed", ben.master_seed, "Master seed")->capture_default_str();
  bench->add_option("--outdir", ben.outdir, "Output directory")->required();
  bench->add_option("--variant", ben.variant, "Cosine variant")->capture_default_str();
  bench->add_option("--preset", ben.preset, "default | high-quality")->capture_default_str();
  bench->add_option("--threads", ben.threads, "Worker threads")->capture_default_str();
  bench->add_flag("--record-times", ben.record_times, "Write wall-clock times into record files");

  RenderOpts ren;
  auto* render = app.add_subcommand("render", "Render a drawing as SVG");
  render->add_option("--graph", ren.graph, "Edge list")->required();
  render->add_option("--layout", ren.layout, "Layout JSON")->required();
  render->add_option("--out", ren.out, "Output SVG")->required();
  render->add_flag("--annotate", ren.annotate, "Label crossings with their angles");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(gen, out);
    if (*layout) return cmd_layout(lay, out);
    if (*meas) return cmd_measure(mea, out);
    if (*bench) return cmd_bench(ben, out);
    if (*render) return cmd_render(ren, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace bigcross
