#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bigcross/bench.hpp"
#include "bigcross/crossings.hpp"
#include "bigcross/graph.hpp"
#include "bigcross/metrics.hpp"

namespace bigcross {

/// Malformed or inconsistent input data.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge list text format: a header line "n m", then m lines "u v" (0-based).

void write_edge_list(std::ostream& os, const Graph& g);
Graph read_edge_list(std::istream& is);
Graph read_edge_list_file(const std::filesystem::path& path);
void write_edge_list_file(const std::filesystem::path& path, const Graph& g);

struct RunInfo {
  std::string algo;  // "classical" or "bigcross"
  long iterations = 0;
  bool converged = false;

  friend bool operator==(const RunInfo&, const RunInfo&) = default;
};

/// JSON layout document: {"n", "positions": [[x,y],...], "seed", "params", "run"?}.
struct LayoutFile {
  Layout layout;
  std::uint64_t seed = 0;
  LayoutParams params;
  std::optional<RunInfo> run;
};

nlohmann::json params_to_json(const LayoutParams& p);
LayoutParams params_from_json(const nlohmann::json& j);

nlohmann::json layout_to_json(const LayoutFile& f);
LayoutFile layout_from_json(const nlohmann::json& j);
LayoutFile read_layout_file(const std::filesystem::path& path);
void write_layout_file(const std::filesystem::path& path, const LayoutFile& f);

nlohmann::json metrics_to_json(const MetricsReport& m);
MetricsReport metrics_from_json(const nlohmann::json& j);
nlohmann::json crossings_to_json(const Graph& g, const std::vector<Crossing>& crossings);

nlohmann::json spec_to_json(const GenSpec& s);
GenSpec spec_from_json(const nlohmann::json& j);

/// Wall-clock times are only written when include_times is set, so that record
/// files are reproducible by default.
nlohmann::json record_to_json(const BenchRecord& r, bool include_times = false);
BenchRecord record_from_json(const nlohmann::json& j);

/// Columns: metric, median_bigcross, median_classical, median_diff, W,
/// n_effective, p, method.
void write_summary_csv(std::ostream& os, const BenchSummary& s);

/// Writes `text` to `path`, throwing DataError if the file cannot be opened.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace bigcross
