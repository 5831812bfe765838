#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bigcross/stats.hpp"
#include "oracles.hpp"

using namespace bigcross;

TEST(Median, Examples) {
  EXPECT_EQ(median({3, 1, 2}), 2.0);
  EXPECT_EQ(median({4, 1, 3, 2}), 2.5);
  EXPECT_EQ(median({7}), 7.0);
  EXPECT_THROW(median({}), std::invalid_argument);
}

TEST(Stddev, Population) {
  const std::vector<double> v{2, 4, 4, 4, 5, 5, 7, 9};
  EXPECT_DOUBLE_EQ(mean(v), 5.0);
  EXPECT_DOUBLE_EQ(population_stddev(v), 2.0);
  EXPECT_EQ(population_stddev(std::vector<double>{3.0}), 0.0);
}

TEST(Wilcoxon, SmallExamples) {
  const std::vector<double> a{1, 2, 3};
  const auto r = wilcoxon_signed_rank(a);
  EXPECT_EQ(r.method, WilcoxonMethod::exact);
  EXPECT_EQ(r.w_plus, 6.0);
  EXPECT_EQ(r.w_minus, 0.0);
  EXPECT_EQ(r.w_statistic, 0.0);
  EXPECT_DOUBLE_EQ(r.p_value, 0.25);

  const std::vector<double> b{1, -1};
  const auto rb = wilcoxon_signed_rank(b);
  EXPECT_EQ(rb.w_plus, 1.5);
  EXPECT_DOUBLE_EQ(rb.p_value, 1.0);

  const std::vector<double> c(6, 1.0);
  EXPECT_DOUBLE_EQ(wilcoxon_signed_rank(c).p_value, 0.03125);
}

TEST(Wilcoxon, ZerosDropped) {
  const std::vector<double> d{0, 0, 1, 2, 3};
  const auto r = wilcoxon_signed_rank(d);
  EXPECT_EQ(r.n_effective, 3);
  EXPECT_DOUBLE_EQ(r.p_value, 0.25);
}

TEST(Wilcoxon, AllZeroIsDegenerate) {
  const std::vector<double> d(10, 0.0);
  const auto r = wilcoxon_signed_rank(d);
  EXPECT_TRUE(r.degenerate());
  EXPECT_TRUE(std::isnan(r.p_value));
  EXPECT_EQ(r.n_effective, 0);
}

TEST(Wilcoxon, ExactMatchesBruteForceEnumeration) {
  std::mt19937_64 rng(40);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    std::vector<double> d(n);
    // small integer magnitudes to force ties and zeros
    for (double& x : d) x = static_cast<double>(static_cast<int>(rng() % 9) - 4);
    if (std::all_of(d.begin(), d.end(), [](double x) { return x == 0; })) continue;
    const auto r = wilcoxon_signed_rank(d);
    ASSERT_EQ(r.method, WilcoxonMethod::exact);
    EXPECT_NEAR(r.p_value, oracle::brute_force_wilcoxon_p(d), 1e-12);
  }
}

TEST(Wilcoxon, ExactAtTheCutoff) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> z(0.2, 1.0);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<double> d(22);
    for (double& x : d) x = z(rng);
    const auto r = wilcoxon_signed_rank(d);
    ASSERT_EQ(r.method, WilcoxonMethod::exact);
    EXPECT_NEAR(r.p_value, oracle::brute_force_wilcoxon_p(d), 1e-12);
  }
}

TEST(Wilcoxon, NormalApproxCloseToEnumeration) {
  // Just above the exact limit the approximation is still enumerable.
  std::mt19937_64 rng(41);
  std::normal_distribution<double> z(0.3, 1.0);
  std::vector<double> d(26);
  for (double& x : d) x = z(rng);
  const auto r = wilcoxon_signed_rank(d);
  ASSERT_EQ(r.method, WilcoxonMethod::normal_approx);
  EXPECT_NEAR(r.p_value, oracle::brute_force_wilcoxon_p(d), 0.02);
}

TEST(Wilcoxon, SignFlipAndScaleInvariance) {
  std::mt19937_64 rng(43);
  std::normal_distribution<double> z(0.1, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 5 + rng() % 40;
    std::vector<double> d(n), neg(n), scaled(n);
    for (std::size_t i = 0; i < n; ++i) {
      d[i] = z(rng);
      neg[i] = -d[i];
      scaled[i] = 2.5 * d[i];
    }
    const auto a = wilcoxon_signed_rank(d);
    EXPECT_NEAR(wilcoxon_signed_rank(neg).p_value, a.p_value, 1e-12);
    EXPECT_NEAR(wilcoxon_signed_rank(scaled).p_value, a.p_value, 1e-12);
    EXPECT_EQ(wilcoxon_signed_rank(neg).w_plus, a.w_minus);
    EXPECT_GE(a.p_value, 0.0);
    EXPECT_LE(a.p_value, 1.0);
  }
}

TEST(Wilcoxon, StrongShiftIsSignificant) {
  std::vector<double> d;
  for (int i = 1; i <= 100; ++i) d.push_back(i % 10 == 0 ? -0.1 : 1.0 + 0.01 * i);
  const auto r = wilcoxon_signed_rank(d);
  EXPECT_EQ(r.method, WilcoxonMethod::normal_approx);
  EXPECT_LT(r.p_value, 1e-10);
}
