#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bigcross/engine.hpp"
#include "bigcross/generators.hpp"
#include "bigcross/metrics.hpp"
#include "bigcross/stats.hpp"

namespace bigcross {

/// One graph drawn by both algorithms from the same initial layout.
struct BenchRecord {
  GenSpec graph_spec;
  std::uint64_t seed = 0;  // initial placement seed
  std::string variant;     // cosine variant used for the BIGCROSS run
  MetricsReport initial_metrics;
  MetricsReport classical_metrics;
  MetricsReport bigcross_metrics;
  long classical_iters = 0;
  long bigcross_iters = 0;
  bool classical_converged = false;
  bool bigcross_converged = false;
  double classical_time = 0.0;
  double bigcross_time = 0.0;
};

/// Runs the classical model (params with variant forced to classical) and the
/// BIGCROSS model (params as given) from initial_placement(n, seed).
BenchRecord run_pair(const Graph& g, const GenSpec& spec, const LayoutParams& params, std::uint64_t seed);

/// Like run_pair but with an explicit pair of parameter sets.
BenchRecord run_pair(const Graph& g, const GenSpec& spec, const LayoutParams& classical_params,
                     const LayoutParams& bigcross_params, std::uint64_t seed);

struct MetricSummary {
  std::string metric;
  double median_bigcross = 0.0;
  double median_classical = 0.0;
  double median_diff = 0.0;  // median of per-graph (bigcross - classical)
  WilcoxonResult wilcoxon;
  std::size_t samples = 0;
};

struct BenchSummary {
  std::size_t records = 0;
  std::vector<MetricSummary> rows;

  const MetricSummary& row(const std::string& metric) const;
};

/// Fewest records summarize() accepts.
inline constexpr std::size_t kMinSummaryRecords = 6;

/// Medians and paired Wilcoxon tests for crossings, angle_mean, angle_stddev,
/// angular_resolution, edge_len_mean, edge_len_stddev and iterations.
/// Records with an undefined angular resolution on either side are left out of
/// that row only. Throws std::invalid_argument for fewer than 6 records.
BenchSummary summarize(const std::vector<BenchRecord>& records);

/// `count` graph specs for `model`: n uniform in [10, 50], m uniform in
/// [n-1, 3n] ([n-1, 3n-6] for random-planar). Spec i is derived from
/// hash(master_seed, model, i) alone, so lists are extensible.
std::vector<GenSpec> bench_specs(Model model, std::size_t count, std::uint64_t master_seed);

/// Layout seed paired with a generated spec.
std::uint64_t layout_seed_for(const GenSpec& spec);

/// run_pair over every spec. Records are independent and may be computed on
/// `threads` workers; output order always follows `specs`.
std::vector<BenchRecord> run_bench(const std::vector<GenSpec>& specs, const LayoutParams& params,
                                   unsigned threads = 1);

}  // namespace bigcross
