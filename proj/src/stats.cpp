#include "bigcross/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace bigcross {

double mean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double population_stddev(std::span<const double> values) {
  if (values.size() < 2) return 0.0;
  const double mu = mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - mu) * (v - mu);
  return std::sqrt(ss / static_cast<double>(values.size()));
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty list");
  const std::size_t n = values.size();
  const auto mid = values.begin() + static_cast<std::ptrdiff_t>(n / 2);
  std::nth_element(values.begin(), mid, values.end());
  if (n % 2 == 1) return *mid;
  const double upper = *mid;
  const double lower = *std::max_element(values.begin(), mid);
  return 0.5 * (lower + upper);
}

std::string to_string(WilcoxonMethod m) {
  switch (m) {
    case WilcoxonMethod::exact: return "exact";
    case WilcoxonMethod::normal_approx: return "normal_approx";
    case WilcoxonMethod::degenerate: return "degenerate";
  }
  return "unknown";
}

namespace {

// Doubled average ranks of |d| (so ties at k, k+1 give 2k+1), plus the tie
// group sizes for the variance correction.
void rank_magnitudes(const std::vector<double>& mags, std::vector<long>& doubled_rank,
                     std::vector<long>& tie_sizes) {
  const std::size_t n = mags.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return mags[a] < mags[b]; });
  doubled_rank.assign(n, 0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && mags[order[j + 1]] == mags[order[i]]) ++j;
    // ranks i+1 .. j+1 averaged, doubled
    const long r2 = static_cast<long>(i + 1 + j + 1);
    for (std::size_t k = i; k <= j; ++k) doubled_rank[order[k]] = r2;
    tie_sizes.push_back(static_cast<long>(j - i + 1));
    i = j + 1;
  }
}

// P(T2 <= w2) * 2^n as a count, where T2 is the doubled positive-rank sum under
// random signs.
double exact_lower_count(const std::vector<long>& doubled_rank, long w2) {
  const long total = std::accumulate(doubled_rank.begin(), doubled_rank.end(), 0L);
  std::vector<double> count(static_cast<std::size_t>(total) + 1, 0.0);
  count[0] = 1.0;
  long reach = 0;
  for (long r : doubled_rank) {
    for (long s = reach; s >= 0; --s) {
      if (count[static_cast<std::size_t>(s)] != 0.0)
        count[static_cast<std::size_t>(s + r)] += count[static_cast<std::size_t>(s)];
    }
    reach += r;
  }
  double c = 0.0;
  for (long s = 0; s <= std::min(w2, total); ++s) c += count[static_cast<std::size_t>(s)];
  return c;
}

}  // namespace

WilcoxonResult wilcoxon_signed_rank(std::span<const double> diffs) {
  WilcoxonResult res;
  std::vector<double> mags;
  std::vector<bool> positive;
  for (double d : diffs) {
    if (!std::isfinite(d)) throw std::invalid_argument("non-finite difference");
    if (d == 0.0) continue;
    mags.push_back(std::abs(d));
    positive.push_back(d > 0);
  }
  const int n = static_cast<int>(mags.size());
  res.n_effective = n;
  if (n == 0) {
    res.p_value = std::numeric_limits<double>::quiet_NaN();
    res.method = WilcoxonMethod::degenerate;
    return res;
  }

  std::vector<long> doubled_rank;
  std::vector<long> tie_sizes;
  rank_magnitudes(mags, doubled_rank, tie_sizes);
  long plus2 = 0, minus2 = 0;
  for (int i = 0; i < n; ++i) (positive[i] ? plus2 : minus2) += doubled_rank[i];
  res.w_plus = plus2 / 2.0;
  res.w_minus = minus2 / 2.0;
  res.w_statistic = std::min(res.w_plus, res.w_minus);

  if (n <= kWilcoxonExactLimit) {
    const double patterns = std::ldexp(1.0, n);
    const double lower = exact_lower_count(doubled_rank, std::min(plus2, minus2));
    res.p_value = std::min(1.0, 2.0 * lower / patterns);
    res.method = WilcoxonMethod::exact;
    return res;
  }

  const double nn = n;
  const double mu = nn * (nn + 1.0) / 4.0;
  double var = nn * (nn + 1.0) * (2.0 * nn + 1.0) / 24.0;
  for (long t : tie_sizes) var -= static_cast<double>(t * t * t - t) / 48.0;
  const double z = std::max(0.0, std::abs(res.w_plus - mu) - 0.5) / std::sqrt(var);
  res.p_value = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
  res.method = WilcoxonMethod::normal_approx;
  return res;
}

}  // namespace bigcross
