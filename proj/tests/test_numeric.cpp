// Copyright 2026 The orliczkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <atomic>

#include "oracles.hpp"
#include "orliczkit/numeric.hpp"

using namespace orliczkit;

TEST(LogGrid, EndpointsAndRatio) {
  const auto g = log_grid(1e-3, 1e3, 61);
  ASSERT_EQ(g.size(), 61u);
  EXPECT_DOUBLE_EQ(g.front(), 1e-3);
  EXPECT_DOUBLE_EQ(g.back(), 1e3);
  for (std::size_t k = 1; k < g.size(); ++k) EXPECT_NEAR(g[k] / g[k - 1], std::pow(10.0, 0.1), 1e-12);
}

TEST(PairwiseSum, IndependentOfHowTermsWereProduced) {
  std::vector<double> terms(10007);
  std::mt19937_64 rng(3);
  for (double& t : terms) t = uniform01(rng) * 1e-3 + 1.0;
  const double a = pairwise_sum(terms);
  std::vector<double> copy = terms;
  EXPECT_EQ(a, pairwise_sum(copy));
  double naive = 0.0;
  for (double t : terms) naive += t;
  EXPECT_NEAR(a, naive, 1e-9 * naive);
}

TEST(FitLine, RecoversExactLine) {
  std::vector<double> x{0, 1, 2, 3, 4}, y;
  for (double v : x) y.push_back(2.5 * v - 1.0);
  const LineFit f = fit_line(x, y);
  EXPECT_NEAR(f.slope, 2.5, 1e-14);
  EXPECT_NEAR(f.intercept, -1.0, 1e-14);
}

TEST(IntegrateLog, MatchesSimpson) {
  const ScalarFn f = [](double s) { return std::sqrt(s) * std::log(1.0 + s); };
  EXPECT_NEAR(integrate_log(f, 0.01, 50.0), oracle::simpson_log(f, 0.01, 50.0), 1e-8);
}

TEST(IntegrateToZero, PowerLikeIntegrands) {
  // Antiderivative 2 sqrt(s).
  EXPECT_NEAR(integrate_to_zero([](double s) { return 1.0 / std::sqrt(s); }, 1.0), 2.0, 1e-8);
  EXPECT_NEAR(integrate_to_zero([](double s) { return s * s; }, 2.0), 8.0 / 3.0, 1e-10);
}

TEST(IntegrateToZero, DivergenceIsReported) {
  EXPECT_THROW(integrate_to_zero([](double s) { return 1.0 / s; }, 1.0), DivergentIntegral);
  EXPECT_THROW(integrate_to_zero([](double s) { return std::pow(s, -1.5); }, 1.0), DivergentIntegral);
}

TEST(CumulativeIntegral, StopsAtOverflow) {
  const auto grid = log_grid(1e-2, 1e4, 61);
  const auto v = cumulative_integral([](double s) { return s; }, grid);
  ASSERT_EQ(v.size(), grid.size());
  for (std::size_t k = 0; k < grid.size(); k += 10) EXPECT_NEAR(v[k], grid[k] * grid[k] / 2.0, 1e-9 * v[k]);
  const auto cut = cumulative_integral([](double s) { return std::exp(s); }, log_grid(1.0, 1e4, 41));
  EXPECT_LT(cut.size(), 41u);
}

TEST(MaximizeConcave, QuadraticPeak) {
  // s r - r^2 peaks at r = s/2 with value s^2/4.
  const double s = 3.0;
  const Maximum m = maximize_concave([s](double r) { return s * r - r * r; }, 1.0, kInf);
  EXPECT_NEAR(m.arg, 1.5, 1e-6);
  EXPECT_NEAR(m.value, 2.25, 1e-10);
  const Maximum clamped = maximize_concave([s](double r) { return s * r - r * r; }, 0.1, 1.0);
  EXPECT_NEAR(clamped.arg, 1.0, 1e-9);
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(ParallelFor, RethrowsLowestFailingIndex) {
  try {
    parallel_for(100, 3, [](std::size_t i) {
      if (i == 41 || i == 77) throw Error("index " + std::to_string(i));
    });
    FAIL() << "no exception";
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "index 41");
  }
}

TEST(Uniform01, RangeAndReproducibility) {
  std::mt19937_64 a(11), b(11);
  for (int k = 0; k < 1000; ++k) {
    const double x = uniform01(a);
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
    EXPECT_EQ(x, uniform01(b));
  }
}
