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

#include "oracles.hpp"
#include "orliczkit/norms.hpp"

using namespace orliczkit;

namespace {

RasterDomain square(double side, std::size_t cells_per_side) {
  DomainSpec s;
  s.side = side;
  s.h = side / static_cast<double>(cells_per_side);
  return generate(s);
}

SampledFunction constant(const RasterDomain& d, double c) {
  return SampledFunction::from_field(d, [c](const Point&) { return c; });
}

}  // namespace

TEST(Modular, Examples) {
  const RasterDomain d = square(1.0, 64);
  const YoungFunction a = YoungFunction::power(2.0);
  EXPECT_EQ(modular(constant(d, 0.0), a, 3.0), 0.0);
  EXPECT_DOUBLE_EQ(modular(constant(d, 1.0), a, 1.0), d.measure());
  EXPECT_NEAR(modular(constant(d, 5.0), a, 5.0), 1.0, 1e-14);
  EXPECT_THROW(modular(constant(d, 1.0), a, 0.0), Error);
}

TEST(Modular, SaturationGivesInfinity) {
  const RasterDomain d = square(1.0, 16);
  const YoungFunction indicator = conjugate(YoungFunction::linear());
  EXPECT_TRUE(std::isinf(modular(constant(d, 3.0), indicator, 1.0)));
  EXPECT_EQ(modular(constant(d, 0.5), indicator, 1.0), 0.0);
}

TEST(Modular, NonincreasingInLambda) {
  const RasterDomain d = square(1.0, 32);
  const auto f = SampledFunction::from_field(d, [](const Point& p) { return std::sin(7 * p[0]) + p[1]; });
  const YoungFunction a = YoungFunction::power_log(2.0, 1.0);
  double prev = kInf;
  for (double lambda : log_grid(1e-2, 1e2, 21)) {
    const double v = modular(f, a, lambda);
    EXPECT_LE(v, prev);
    prev = v;
  }
}

TEST(Luxemburg, Examples) {
  const RasterDomain d = square(1.0, 64);
  EXPECT_EQ(luxemburg_norm(constant(d, 0.0), YoungFunction::power(2.0)), 0.0);
  EXPECT_NEAR(luxemburg_norm(constant(d, 3.0), YoungFunction::power(2.0)), 3.0, 3e-6);
  // c / A^{-1}(1) for A = s^3 / 8: A^{-1}(1) = 2.
  EXPECT_NEAR(luxemburg_norm(constant(d, 3.0), YoungFunction::power(3.0, 0.125)), 1.5, 2e-6);
}

TEST(Luxemburg, CharacteristicFunctionClosedForm) {
  for (double p : {2.0, 3.0}) {
    const YoungFunction a = YoungFunction::power(p);
    for (double measure : log_grid(1e-4, 1e2, 13)) {
      const RasterDomain d = square(std::sqrt(measure), 40);
      const double expected = std::pow(d.measure(), 1.0 / p);
      EXPECT_NEAR(luxemburg_norm(constant(d, 1.0), a), expected, 1e-3 * expected) << "p=" << p;
      EXPECT_NEAR(chi_norm_closed(a, d.measure()), expected, 1e-9 * expected);
    }
  }
}

TEST(ChiNormClosed, Examples) {
  EXPECT_NEAR(chi_norm_closed(YoungFunction::power(2.0), 0.25), 0.5, 1e-9);
  EXPECT_NEAR(chi_norm_closed(YoungFunction::linear(), 2.0), 2.0, 1e-9);
  EXPECT_NEAR(chi_norm_closed(YoungFunction::power(3.0), 0.125), 0.5, 1e-9);
  EXPECT_THROW(chi_norm_closed(YoungFunction::power(2.0), 0.0), Error);
}

TEST(Luxemburg, HomogeneityMonotonicityThreshold) {
  const RasterDomain d = square(1.0, 48);
  const auto f = SampledFunction::from_field(d, [](const Point& p) { return p[0] * p[0] - 0.3 * p[1]; });
  const auto g = SampledFunction::from_field(d, [](const Point& p) { return std::abs(p[0] * p[0] - 0.3 * p[1]) + 0.1; });
  for (const YoungFunction& a : {YoungFunction::power(1.5), YoungFunction::power_log(2.0, 1.0)}) {
    const double base = luxemburg_norm(f, a);
    for (double t : {0.5, 2.0, 10.0}) EXPECT_NEAR(luxemburg_norm(f.scaled(t), a), t * base, 1e-5 * t * base);
    EXPECT_LE(base, luxemburg_norm(g, a) * (1.0 + 1e-6));
    EXPECT_LE(modular(f, a, base * (1.0 + 1e-4)), 1.0);
    EXPECT_LE(modular(f, a, base * (1.0 + 1e-5)), 1.0);
  }
}

TEST(Luxemburg, WindowDiagnostic) {
  const RasterDomain d = square(1.0, 8);
  const YoungFunction indicator = conjugate(YoungFunction::linear());
  // The indicator of [0, 1] has modular 0 or infinity: no lambda gives exactly 1, but
  // the norm is the smallest lambda with |f| / lambda <= 1.
  EXPECT_NEAR(luxemburg_norm(constant(d, 2.0), indicator), 2.0, 1e-5);
}

TEST(Differences, ExactOnLinearFields) {
  const RasterDomain d = square(1.0, 32);
  const auto f = SampledFunction::from_field(d, [](const Point& p) { return 3 * p[0] - 2 * p[1]; });
  const auto dx = difference(f, 0), dy = difference(f, 1);
  for (std::size_t q = 0; q < dx.values().size(); ++q) {
    EXPECT_NEAR(dx.values()[q], 3.0, 1e-10);
    EXPECT_NEAR(dy.values()[q], -2.0, 1e-10);
  }
  const auto grad = gradient_magnitude(f);
  EXPECT_NEAR(grad.values()[100], std::sqrt(13.0), 1e-10);
  EXPECT_THROW(difference(f, 2), Error);
}

TEST(MultiIndices, Counts) {
  EXPECT_EQ(multi_indices(2, 1).size(), 3u);
  EXPECT_EQ(multi_indices(2, 2).size(), 6u);
  EXPECT_EQ(multi_indices(3, 2).size(), 10u);
  EXPECT_EQ(multi_indices(3, 1).front(), (MultiIndex{0, 0, 0}));
}

TEST(Sobolev, Examples) {
  const RasterDomain d = square(1.0, 64);
  const YoungFunction a = YoungFunction::power(2.0);
  EXPECT_NEAR(sobolev_norm(constant(d, 2.0), a, 1), 2.0, 1e-5);
  // f = x1: ||x1||_{L^2} = 1/sqrt(3), gradient terms ||1|| + ||0||.
  const auto x1 = SampledFunction::from_field(d, [](const Point& p) { return p[0]; });
  const double l2 = std::sqrt(1.0 / 3.0 - 1.0 / (12.0 * 64 * 64));
  EXPECT_NEAR(sobolev_norm(x1, a, 1), l2 + 1.0, 1e-5);
  EXPECT_NEAR(sobolev_norm(x1, a, 1, SobolevConvention::gradient_magnitude), l2 + 1.0, 1e-5);
  EXPECT_THROW(sobolev_norm(x1, a, 2), Error);
  EXPECT_THROW(sobolev_norm(x1, a, 2, SobolevConvention::gradient_magnitude), Error);
}

TEST(Sobolev, SecondOrder) {
  const RasterDomain d = square(1.0, 64);
  const auto q = SampledFunction::from_field(d, [](const Point& p) { return p[0] * p[0]; }, 2);
  const YoungFunction a = YoungFunction::power(2.0);
  // Terms: ||x^2||, ||2x||, ||0||, ||2||, ||0||, ||0||; stencils are exact inside and
  // one-sided at the edges, so allow a boundary-layer error.
  const double expected = std::sqrt(1.0 / 5.0) + 2.0 / std::sqrt(3.0) + 2.0;
  EXPECT_NEAR(sobolev_norm(q, a, 2), expected, 0.05);
}
