#pragma once

#include <span>
#include <string>
#include <vector>

namespace bigcross {

/// Arithmetic mean; 0 for an empty range.
double mean(std::span<const double> values);

/// Standard deviation dividing by N; 0 for fewer than two values.
double population_stddev(std::span<const double> values);

/// Middle order statistic, or the mean of the two middle ones for even length.
/// Throws std::invalid_argument on an empty list.
double median(std::vector<double> values);

enum class WilcoxonMethod { exact, normal_approx, degenerate };

std::string to_string(WilcoxonMethod m);

struct WilcoxonResult {
  double w_statistic = 0.0;  // min(W+, W-)
  double w_plus = 0.0;
  double w_minus = 0.0;
  int n_effective = 0;       // number of nonzero differences
  double p_value = 0.0;      // two-sided; NaN when degenerate
  WilcoxonMethod method = WilcoxonMethod::degenerate;

  bool degenerate() const { return method == WilcoxonMethod::degenerate; }
};

/// Largest sample size for which the exact null distribution is used.
inline constexpr int kWilcoxonExactLimit = 25;

/// Two-sided Wilcoxon signed-rank test on paired differences.
///
/// Zero differences are dropped and tied magnitudes receive average ranks. For
/// n_effective <= 25 the p-value is exact, P(min(T, S - T) <= W) under the 2^n
/// equally likely sign patterns; above that a normal approximation with tie
/// correction and continuity correction is used. All-zero input gives a
/// degenerate result with NaN p-value.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> diffs);

}  // namespace bigcross
