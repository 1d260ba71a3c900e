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
#include "orliczkit/harness.hpp"

using namespace orliczkit;

namespace {

RasterDomain cube(double h, double side = 1.0) {
  DomainSpec s;
  s.side = side;
  s.h = h;
  return generate(s);
}

}  // namespace

TEST(Smoothstep, EndpointsAndFlatness) {
  for (int m : {1, 2, 3}) {
    EXPECT_DOUBLE_EQ(smoothstep(m, 0.0), 0.0);
    EXPECT_DOUBLE_EQ(smoothstep(m, 1.0), 1.0);
    EXPECT_NEAR(smoothstep(m, 0.5), 0.5, 1e-12);
    double prev = 0.0;
    for (int k = 1; k <= 100; ++k) {
      const double v = smoothstep(m, k / 100.0);
      EXPECT_GE(v, prev);
      prev = v;
    }
  }
  EXPECT_DOUBLE_EQ(smoothstep(1, 0.3), 0.3);
  // m = 2: first derivative vanishes at both ends.
  const double e = 1e-5;
  EXPECT_LT(smoothstep(2, e) / e, 1e-3);
  EXPECT_LT((1.0 - smoothstep(2, 1.0 - e)) / e, 1e-3);
}

TEST(Cutoff, SupportAndGradient) {
  const double h = 1.0 / 256;
  const RasterDomain d = cube(h);
  const Point x{0.5, 0.5, 0.0};
  const double big = 0.3, small = 0.15;
  const Cutoff c = cutoff(d, x, big, small, 1);
  const auto& dims = d.dims();
  for (std::size_t j = 0; j < dims[1]; j += 3) {
    for (std::size_t i = 0; i < dims[0]; i += 3) {
      const Point p = d.center(i, j);
      const double r = std::hypot(p[0] - x[0], p[1] - x[1]);
      const double v = c.eta.values()[i + dims[0] * j];
      if (r <= small) { EXPECT_EQ(v, 1.0); }
      if (r >= big) { EXPECT_EQ(v, 0.0); }
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
  }
  EXPECT_LE(c.c_tilde, 1.05);
  EXPECT_GE(c.c_tilde, 0.9);
  EXPECT_THROW(cutoff(d, x, small, big, 1), Error);
}

TEST(Cutoff, HigherOrderConstantIsMeasured) {
  const RasterDomain d = cube(1.0 / 128);
  const Cutoff c = cutoff(d, {0.5, 0.5, 0.0}, 0.4, 0.2, 2);
  EXPECT_GT(c.c_tilde, 1.0);
  EXPECT_LT(c.c_tilde, 10.0);
}

TEST(EmbeddingProbe, ScalingAndZeroMembers) {
  const RasterDomain d = cube(1.0 / 64);
  const YoungFunction a = YoungFunction::power(2.0);
  const auto ctx = EmbeddingContext::make(2, 1);
  const YoungFunction target = YoungFunction::power(4.0);
  const Cutoff c = cutoff(d, {0.5, 0.5, 0.0}, 0.3, 0.2, 1);
  const ProbeResult one = embedding_probe(a, target, ctx, {{"eta", c.eta}});
  const ProbeResult two = embedding_probe(a, target, ctx, {{"2 eta", c.eta.scaled(2.0)}});
  EXPECT_NEAR(one.c_e, two.c_e, 1e-5 * one.c_e);
  EXPECT_TRUE(std::isfinite(one.c_e));
  const SampledFunction zero(d, std::vector<double>(d.bits().size(), 0.0));
  const ProbeResult with_zero = embedding_probe(a, target, ctx, {{"zero", zero}, {"eta", c.eta}});
  EXPECT_EQ(with_zero.c_e, one.c_e);
  EXPECT_EQ(with_zero.argmax, "eta");
}

TEST(EmbeddingProbe, DefaultFamilySize) {
  // 20 centers x 5 radii plus constant, x1, x2, x1*x2, x1^2.
  EXPECT_EQ(default_probe_family(cube(1.0 / 128), 1, 3, 20).size(), 105u);
  // At h = 1/64 the inner radius of the smallest cut-off is under 2h and is skipped.
  EXPECT_EQ(default_probe_family(cube(1.0 / 64), 1, 3, 20).size(), 85u);
}

TEST(RadiusChain, FullPlaneClosedForm) {
  const double h = 1.0 / 256;
  const RasterDomain d = cube(h, 3.0);
  const double big = 0.5;
  // A generic center: at a lattice-symmetric one, groups of equidistant cells enter
  // together and no radius can split the measure to within two cells.
  const RadiusChain chain = radius_chain(d, {1.5 + 0.31 * h, 1.5 + 0.17 * h, 0.0}, big);
  ASSERT_GT(chain.steps.size(), 5u);
  double sum = 0.0;
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const ChainStep& s = chain.steps[i];
    EXPECT_LT(s.r_inner, s.r_outer);
    EXPECT_NEAR(s.r_inner, big * std::pow(2.0, -static_cast<double>(i + 1) / 2.0), (i + 1) * h);
    EXPECT_LE(std::abs(s.half_residual), 2 * h * h / s.measure_inner);
    sum += s.r_outer - s.r_inner;
  }
  EXPECT_NEAR(sum, chain.telescoped, 1e-12);
  EXPECT_NEAR(chain.telescoped, big - chain.terminal_radius, 1e-12);
  EXPECT_GE(chain.steps.back().measure_inner, kMinHalvingCells * h * h * 0.49);
}

TEST(RadiusChain, ResolutionExhausted) {
  const double h = 1.0 / 64;
  const RasterDomain d = cube(h);
  try {
    radius_chain(d, {0.5, 0.5, 0.0}, 1.5 * h);
    FAIL() << "no exception";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("refine h"), std::string::npos);
  }
}

class CubeHarness : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    domain_ = new RasterDomain(cube(1.0 / 128));
    setup_ = new HarnessSetup(prepare_harness(*domain_, YoungFunction::power(2.0), EmbeddingContext::make(2, 1)));
  }
  static void TearDownTestSuite() {
    delete setup_;
    delete domain_;
  }
  static RasterDomain* domain_;
  static HarnessSetup* setup_;
};
RasterDomain* CubeHarness::domain_ = nullptr;
HarnessSetup* CubeHarness::setup_ = nullptr;

TEST_F(CubeHarness, SetupRecordsItsChoices) {
  EXPECT_TRUE(setup_->modified_near_zero);
  EXPECT_TRUE(setup_->gate.pass());
  EXPECT_TRUE(setup_->boyd_boundary_flag);
  EXPECT_TRUE(setup_->ratio.pass);
  EXPECT_GT(setup_->family_probe.c_e, 0.0);
}

TEST_F(CubeHarness, InteriorVerdictPasses) {
  const double h = domain_->h();
  const NecessityReport r = necessity_verdict(*setup_, *domain_, {0.5 + 0.3 * h, 0.5 + 0.2 * h, 0.0}, 0.5);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.verdict, "pass");
  EXPECT_TRUE(r.half_invariant);
  EXPECT_FALSE(r.margin_degrades);
  EXPECT_NEAR(r.big_c, r.c3 / (1.0 - std::pow(2.0, -0.5)), 1e-12 * r.big_c);
  EXPECT_NEAR(r.final_ratio, 0.5 / std::sqrt(r.measure), 1e-12);
  EXPECT_EQ(r.disclaimer, kHarnessDisclaimer);
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    EXPECT_TRUE(r.rows[i].final_holds) << i;
    EXPECT_TRUE(r.rows[i].step_holds) << i;
    EXPECT_TRUE(r.rows[i].cutoff_bound_holds) << i;
    if (i > 0) { EXPECT_LT(r.rows[i].step.r_outer, r.rows[i - 1].step.r_outer); }
  }
}

TEST_F(CubeHarness, SymmetricCenterFlagsTies) {
  // Centered on a lattice vertex, equidistant cells come in groups of 4 or 8.
  const NecessityReport r = necessity_verdict(*setup_, *domain_, {0.5, 0.5, 0.0}, 0.5);
  EXPECT_TRUE(r.pass);
  EXPECT_FALSE(r.half_invariant);
  EXPECT_NE(std::find(r.flags.begin(), r.flags.end(), "half-measure invariant violated"), r.flags.end());
}

TEST_F(CubeHarness, ConstantsAreInternallyConsistent) {
  const NecessityReport r = necessity_verdict(*setup_, *domain_, {0.3, 0.7, 0.0}, 0.2);
  EXPECT_NEAR(r.c4, 2.0 * r.c_e * std::max(1.0, r.c_tilde), 1e-12 * r.c4);
  EXPECT_NEAR(r.c3, r.c4 * r.c0, 1e-12 * r.c3);
  EXPECT_GE(r.c_e, setup_->family_probe.c_e);
  for (const StepRow& row : r.rows) {
    if (!row.auto_pass) { EXPECT_TRUE(row.chain_link); }
  }
}

TEST_F(CubeHarness, DeterministicAcrossCalls) {
  const NecessityReport a = necessity_verdict(*setup_, *domain_, {0.41, 0.52, 0.0}, 0.1);
  const NecessityReport b = necessity_verdict(*setup_, *domain_, {0.41, 0.52, 0.0}, 0.1);
  EXPECT_EQ(a.c3, b.c3);
  EXPECT_EQ(a.rows.size(), b.rows.size());
}

TEST(Harness, CuspTipMarginDegrades) {
  DomainSpec s;
  s.kind = DomainKind::inward_cusp;
  s.h = 1.0 / 512;
  const RasterDomain d = generate(s);
  const HarnessSetup setup = prepare_harness(d, YoungFunction::power(2.0), EmbeddingContext::make(2, 1));
  // The tip itself is not in the domain: start from the occupied cell nearest to it.
  Point tip{};
  double best = kInf;
  for (std::size_t j = 0; j < d.dims()[1]; ++j) {
    for (std::size_t i = 0; i < d.dims()[0]; ++i) {
      const Point c = d.center(i, j);
      if (d.bits()[i + d.dims()[0] * j] && std::hypot(c[0], c[1]) < best) {
        best = std::hypot(c[0], c[1]);
        tip = c;
      }
    }
  }
  const NecessityReport r = necessity_verdict(setup, d, tip, 0.5);
  EXPECT_TRUE(r.margin_degrades);
  EXPECT_GT(r.rows.back().ratio_to_density, r.rows.front().ratio_to_density);
}

TEST(Harness, RejectsIndexAboveThreshold) {
  const RasterDomain d = cube(1.0 / 64);
  EXPECT_THROW(prepare_harness(d, YoungFunction::power(3.0), EmbeddingContext::make(2, 1)), Error);
}
