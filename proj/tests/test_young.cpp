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
#include "orliczkit/young.hpp"

using namespace orliczkit;

namespace {

std::vector<YoungFunction> builtins() {
  return {YoungFunction::power(1.5), YoungFunction::power(2.0), YoungFunction::power(3.0),
          YoungFunction::power_log(2.0, 1.0)};
}

}  // namespace

TEST(BuildYoung, ClosedFormValues) {
  EXPECT_EQ(YoungFunction::power(2.0)(3.0), 9.0);
  EXPECT_EQ(YoungFunction::power(2.0)(0.0), 0.0);
  EXPECT_EQ(YoungFunction::power(3.0)(2.0), 8.0);
  EXPECT_NEAR(YoungFunction::power_log(2.0, 1.0)(1.0), std::log(std::numbers::e + 1.0), 1e-15);
  EXPECT_NEAR(YoungFunction::power_log(2.0, 1.0)(1.0), 1.3133, 1e-4);
  const YoungFunction lin = YoungFunction::linear();
  EXPECT_FALSE(lin.zero_plateau().has_value());
  EXPECT_DOUBLE_EQ(lin.tail().exponent, 1.0);
}

TEST(BuildYoung, RejectsInvalidInput) {
  EXPECT_THROW(YoungFunction::power(0.5), Error);
  const std::vector<double> r{0.1, 1.0, 10.0};
  const std::vector<double> decreasing{3.0, 2.0, 1.0};
  EXPECT_THROW(YoungFunction::from_density(r, decreasing), Error);
  EXPECT_THROW(YoungFunction::power(2.0)(-1.0), Error);
}

TEST(BuildYoung, EverySampleTableIsYoung) {
  for (const auto& a : builtins()) EXPECT_TRUE(check_young_invariants(a.table()).young()) << a.describe();
}

TEST(BuildYoung, DensityBracket) {
  // a(r) = r on a log grid: A(s) = s^2 / 2.
  const auto r = log_grid(1e-4, 1e4, 161);
  const YoungFunction a = YoungFunction::from_density(r, r);
  for (double s : log_grid(1e-3, 1e3, 25)) {
    EXPECT_NEAR(a(s), s * s / 2.0, 1e-3 * s * s);
    const double density = s;
    EXPECT_LE(a(s) / s, density * (1.0 + 1e-6));
    EXPECT_GE(a(2.0 * s) / s, density * (1.0 - 1e-6));
  }
}

TEST(Conjugate, SelfConjugateFixedPoint) {
  const YoungFunction a = YoungFunction::power(2.0, 0.5);
  const YoungFunction c = conjugate(a, ConjugateMethod::numeric);
  for (double s : log_grid(1e-4, 1e4, 17)) EXPECT_NEAR(c(s), s * s / 2.0, 1e-6 * s * s);
}

TEST(Conjugate, LinearGivesIndicator) {
  const YoungFunction c = conjugate(YoungFunction::linear());
  EXPECT_EQ(c(0.5), 0.0);
  EXPECT_EQ(c(1.0), 0.0);
  EXPECT_TRUE(std::isinf(c(2.0)));
  const InverseValue v = generalized_inverse(c, 0.5, InverseSide::right);
  EXPECT_NEAR(v.value, 1.0, 1e-6);
}

TEST(Conjugate, CubicAgainstBruteForce) {
  const YoungFunction a = YoungFunction::power(3.0, 1.0 / 3.0);
  const YoungFunction c = conjugate(a, ConjugateMethod::numeric);
  EXPECT_NEAR(c(4.0), 16.0 / 3.0, 1e-4);
  const auto cube = [](double r) { return r * r * r / 3.0; };
  for (double s : {0.01, 0.5, 4.0, 100.0}) {
    const double ref = oracle::brute_conjugate(cube, s);
    EXPECT_NEAR(c(s), ref, 1e-5 * ref) << s;
  }
}

TEST(Conjugate, PowerLogAgainstBruteForce) {
  const YoungFunction c = conjugate(YoungFunction::power_log(2.0, 1.0));
  const auto a = [](double r) { return oracle::power_log(2.0, 1.0, r); };
  for (double s : {0.1, 2.0, 50.0, 1e3}) {
    const double ref = oracle::brute_conjugate(a, s);
    EXPECT_NEAR(c(s), ref, 1e-4 * ref) << s;
  }
}

TEST(Conjugate, NumericMatchesClosedForm) {
  for (double p : {1.5, 2.0, 3.0}) {
    const YoungFunction c = conjugate(YoungFunction::power(p), ConjugateMethod::numeric);
    for (double t : log_grid(1e-3, 1e3, 13)) {
      const double ref = oracle::power_conjugate(p, t);
      EXPECT_NEAR(c(t), ref, 1e-4 * ref) << "p=" << p << " t=" << t;
    }
  }
}

TEST(Conjugate, Involution) {
  for (const auto& a : builtins()) {
    const YoungFunction back =
        conjugate(conjugate(a, ConjugateMethod::numeric), ConjugateMethod::numeric);
    double worst = 0.0;
    for (double s : a.table().abscissae()) {
      if (s < 1e-4 || s > 1e4) continue;
      worst = std::max(worst, std::abs(back(s) - a(s)) / a(s));
    }
    EXPECT_LT(worst, 1e-3) << a.describe();
  }
}

TEST(GeneralizedInverse, Examples) {
  EXPECT_NEAR(generalized_inverse(YoungFunction::power(2.0), 4.0, InverseSide::right).value, 2.0, 1e-9);
  EXPECT_NEAR(generalized_inverse(YoungFunction::linear(), 0.0, InverseSide::right).value, 0.0, 1e-12);
}

TEST(GeneralizedInverse, SidesDifferOnlyAcrossPlateaus) {
  const YoungFunction c = conjugate(YoungFunction::linear(2.0));
  // c vanishes on [0, 2]: the right inverse of 0 is the plateau end, the left one 0.
  EXPECT_NEAR(generalized_inverse(c, 0.0, InverseSide::right).value, 2.0, 1e-6);
  EXPECT_NEAR(generalized_inverse(c, 0.0, InverseSide::left).value, 0.0, 1e-9);
  const YoungFunction a = YoungFunction::power(2.0);
  const double l = generalized_inverse(a, 7.0, InverseSide::left).value;
  const double r = generalized_inverse(a, 7.0, InverseSide::right).value;
  EXPECT_NEAR(l, r, 1e-6 * r);
}

TEST(GeneralizedInverse, SaturationIsFlagged) {
  const MonotoneFunction f(SampleTable(TableParts{{1.0, 2.0, 4.0}, {0.5, 0.75, 0.875}, {}, Tail{{}, 1.0, 1.0}, {}, {}}));
  const InverseValue v = generalized_inverse(f, 2.0, InverseSide::right);
  EXPECT_TRUE(v.saturated);
}

TEST(GeneralizedInverse, RoundTrip) {
  for (const auto& a : builtins()) {
    const auto s = a.table().abscissae();
    for (std::size_t k = 0; k < s.size(); k += 37) {
      const double v = a(s[k]);
      const double step = s.size() > 1 ? s[1] / s[0] : 1.0;
      EXPECT_GE(generalized_inverse(a, v, InverseSide::right).value * step, s[k]) << a.describe();
      EXPECT_LE(generalized_inverse(a, v, InverseSide::left).value / step, s[k]) << a.describe();
    }
  }
}

TEST(GeneralizedInverse, ProductBounds) {
  for (const auto& a : builtins()) {
    const YoungFunction c = conjugate(a);
    for (double r : log_grid(1e-6, 1e8, 57)) {
      const double prod = generalized_inverse(a, r, InverseSide::right).value *
                          generalized_inverse(c, r, InverseSide::right).value;
      EXPECT_GE(prod, r * 0.99) << a.describe() << " r=" << r;
      EXPECT_LE(prod, 2.0 * r * 1.01) << a.describe() << " r=" << r;
    }
  }
}

TEST(IntegralMean, PowerAndComparison) {
  const YoungFunction bar = integral_mean(YoungFunction::power(2.0));
  EXPECT_NEAR(bar(2.0), 2.0, 1e-6);
  for (const auto& a : builtins()) {
    const YoungFunction b = integral_mean(a);
    for (double s : log_grid(1e-4, 1e4, 33)) {
      EXPECT_LE(b(s), a(s) * (1.0 + 1e-6)) << a.describe();
      EXPECT_LE(a(s), b(2.0 * s) * (1.0 + 1e-6)) << a.describe();
    }
  }
  // A = s^2 at s = 1: 0.5 <= 1 <= 2.
  EXPECT_NEAR(bar(1.0), 0.5, 1e-6);
  EXPECT_NEAR(integral_mean(YoungFunction::power(3.0))(2.0), 8.0 / 3.0, 1e-5);
}

TEST(CompareGrowth, Examples) {
  const auto sq = YoungFunction::power(2.0), cube = YoungFunction::power(3.0);
  const auto cmp = compare_growth(sq, cube, GrowthMode::near_infinity);
  EXPECT_EQ(cmp.b_dominates_a.verdict, GrowthVerdict::dominates);
  EXPECT_DOUBLE_EQ(cmp.b_dominates_a.constant, 1.0);
  EXPECT_TRUE(compare_growth(sq, sq, GrowthMode::global).equivalent());
  const auto pl = compare_growth(YoungFunction::power_log(2.0, 1.0), sq, GrowthMode::near_infinity);
  EXPECT_EQ(pl.b_dominates_a.verdict, GrowthVerdict::fails);
}

TEST(LinearizeNearZero, KeepsConvexityAndTail) {
  const YoungFunction a = YoungFunction::power(2.0);
  const YoungFunction b = linearize_near_zero(a, 1.0);
  EXPECT_TRUE(check_young_invariants(b.table()).young());
  EXPECT_NEAR(b(0.5), 1.0, 1e-9);  // tangent slope a(1) = 2
  // Above s_star the table interpolates a + const between samples.
  EXPECT_NEAR(b(10.0) - b(9.0), a(10.0) - a(9.0), 1e-3 * (a(10.0) - a(9.0)));
}
