#include "bigcross/bench.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

#include "bigcross/hash.hpp"

namespace bigcross {

BenchRecord run_pair(const Graph& g, const GenSpec& spec, const LayoutParams& params, std::uint64_t seed) {
  LayoutParams classical = params;
  classical.variant = Variant::classical;
  return run_pair(g, spec, classical, params, seed);
}

BenchRecord run_pair(const Graph& g, const GenSpec& spec, const LayoutParams& classical_params,
                     const LayoutParams& bigcross_params, std::uint64_t seed) {
  const Layout initial = initial_placement(g.vertex_count(), seed);
  const RunResult classical = run_from(g, initial, classical_params);
  const RunResult bigcross = run_from(g, initial, bigcross_params);

  BenchRecord r;
  r.graph_spec = spec;
  r.seed = seed;
  r.variant = to_string(bigcross_params.variant);
  r.initial_metrics = measure(g, initial);
  r.classical_metrics = measure(g, classical.final);
  r.bigcross_metrics = measure(g, bigcross.final);
  r.classical_iters = classical.iterations;
  r.bigcross_iters = bigcross.iterations;
  r.classical_converged = classical.converged;
  r.bigcross_converged = bigcross.converged;
  r.classical_time = classical.wall_time;
  r.bigcross_time = bigcross.wall_time;
  return r;
}

const MetricSummary& BenchSummary::row(const std::string& metric) const {
  for (const auto& r : rows)
    if (r.metric == metric) return r;
  throw std::out_of_range("no summary row for metric '" + metric + "'");
}

namespace {

struct MetricAccess {
  const char* name;
  std::function<double(const MetricsReport&)> value;
  std::function<bool(const BenchRecord&)> usable;
};

}  // namespace

BenchSummary summarize(const std::vector<BenchRecord>& records) {
  if (records.size() < kMinSummaryRecords)
    throw std::invalid_argument("summarize needs at least " + std::to_string(kMinSummaryRecords) +
                                " records, got " + std::to_string(records.size()));

  auto always = [](const BenchRecord&) { return true; };
  const std::vector<MetricAccess> metrics{
      {"crossings", [](const MetricsReport& m) { return static_cast<double>(m.crossings); }, always},
      {"angle_mean", [](const MetricsReport& m) { return m.angle_mean; }, always},
      {"angle_stddev", [](const MetricsReport& m) { return m.angle_stddev; }, always},
      {"angular_resolution", [](const MetricsReport& m) { return m.angular_resolution; },
       [](const BenchRecord& r) {
         return r.classical_metrics.angular_resolution_defined && r.bigcross_metrics.angular_resolution_defined;
       }},
      {"edge_len_mean", [](const MetricsReport& m) { return m.edge_len_mean; }, always},
      {"edge_len_stddev", [](const MetricsReport& m) { return m.edge_len_stddev; }, always},
  };

  BenchSummary summary;
  summary.records = records.size();
  auto add_row = [&](const std::string& name, const std::vector<double>& big, const std::vector<double>& cls) {
    MetricSummary row;
    row.metric = name;
    row.samples = big.size();
    if (!big.empty()) {
      std::vector<double> diffs(big.size());
      for (std::size_t i = 0; i < big.size(); ++i) diffs[i] = big[i] - cls[i];
      row.median_bigcross = median(big);
      row.median_classical = median(cls);
      row.median_diff = median(diffs);
      row.wilcoxon = wilcoxon_signed_rank(diffs);
    } else {
      row.wilcoxon = wilcoxon_signed_rank({});
    }
    summary.rows.push_back(std::move(row));
  };

  for (const auto& m : metrics) {
    std::vector<double> big, cls;
    for (const auto& r : records) {
      if (!m.usable(r)) continue;
      big.push_back(m.value(r.bigcross_metrics));
      cls.push_back(m.value(r.classical_metrics));
    }
    add_row(m.name, big, cls);
  }

  std::vector<double> big, cls;
  for (const auto& r : records) {
    big.push_back(static_cast<double>(r.bigcross_iters));
    cls.push_back(static_cast<double>(r.classical_iters));
  }
  add_row("iterations", big, cls);
  return summary;
}

std::vector<GenSpec> bench_specs(Model model, std::size_t count, std::uint64_t master_seed) {
  if (model == Model::classic) throw std::invalid_argument("classic graphs are not sampled by bench_specs");
  std::vector<GenSpec> specs;
  specs.reserve(count);
  const std::uint64_t model_seed = mix_seed(master_seed, static_cast<std::uint64_t>(model));
  for (std::size_t i = 0; i < count; ++i) {
    std::mt19937_64 rng(mix_seed(model_seed, i));
    GenSpec s;
    s.model = model;
    s.n = std::uniform_int_distribution<std::size_t>(10, 50)(rng);
    const std::size_t m_max = model == Model::random_planar ? 3 * s.n - 6 : 3 * s.n;
    s.m = std::uniform_int_distribution<std::size_t>(s.n - 1, m_max)(rng);
    if (model == Model::watts_strogatz) s.m = s.n * s.k / 2;
    if (model == Model::eppstein_wang) s.steps = 10 * s.n;
    s.seed = rng();
    specs.push_back(s);
  }
  return specs;
}

std::uint64_t layout_seed_for(const GenSpec& spec) { return mix_seed(spec.seed, 0x1a7 + spec.n); }

std::vector<BenchRecord> run_bench(const std::vector<GenSpec>& specs, const LayoutParams& params,
                                   unsigned threads) {
  std::vector<BenchRecord> records(specs.size());
  std::vector<std::exception_ptr> errors(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        const Graph g = generate(specs[i]);
        records[i] = run_pair(g, specs[i], params, layout_seed_for(specs[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return records;
}

}  // namespace bigcross
