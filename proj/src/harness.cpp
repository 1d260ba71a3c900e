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

#include "orliczkit/harness.hpp"

#include <algorithm>
#include <sstream>

namespace orliczkit {
namespace {

constexpr double kFamilyRadii[] = {0.05, 0.1, 0.2, 0.35, 0.5};
constexpr double kDegradeFactor = 1.5;
constexpr double kRatioThreshold = 1e3;

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double max_abs(const SampledFunction& f) { return f.sup_abs(); }

std::string domain_label(const RasterDomain& d) {
  std::ostringstream os;
  os.precision(17);
  if (d.spec()) {
    os << to_string(d.spec()->kind) << " n=" << d.dim() << " h=" << d.h();
  } else {
    os << "raster n=" << d.dim() << " h=" << d.h();
  }
  return os.str();
}

/// Constant in ||eta||_W <= K max{1, c~} / gap^m ||chi_B||_A.
double norm_count(const EmbeddingContext& ctx) {
  return ctx.m == 1 ? 2.0 : static_cast<double>(multi_indices(ctx.n, ctx.m).size());
}

double inverse_ratio(const YoungFunction& target, const YoungFunction& a, double measure) {
  const double t = generalized_inverse(target, 2.0 / measure, InverseSide::right).value;
  const double b = generalized_inverse(a, 1.0 / measure, InverseSide::right).value;
  return t / b;
}

}  // namespace

double smoothstep(int m, double s) {
  if (m < 1) throw Error("smoothstep: order must be at least 1");
  s = std::clamp(s, 0.0, 1.0);
  const int n = m - 1;
  double acc = 0.0;
  for (int k = 0; k <= n; ++k) acc += binomial(n + k, k) * binomial(2 * n + 1, n - k) * std::pow(-s, k);
  return std::pow(s, n + 1) * acc;
}

Cutoff cutoff(const RasterDomain& d, const Point& x, double big_r, double small_r, int m) {
  if (!(small_r > 0.0) || !(small_r < big_r)) throw Error("cutoff: need 0 < R~ < R");
  const double gap = big_r - small_r;
  std::vector<double> v(d.bits().size(), 0.0);
  const auto& dims = d.dims();
  std::array<std::size_t, 3> lo{0, 0, 0}, hi{0, 0, 0};
  for (int a = 0; a < 3; ++a) {
    if (a >= d.dim()) continue;
    const double first = std::max(std::floor((x[a] - big_r) / d.h()), 0.0);
    const double last = std::min(std::ceil((x[a] + big_r) / d.h()), static_cast<double>(dims[a]) - 1.0);
    lo[a] = static_cast<std::size_t>(first);
    hi[a] = static_cast<std::size_t>(std::max(last, first));
  }
  for (std::size_t k = lo[2]; k <= hi[2]; ++k) {
    for (std::size_t j = lo[1]; j <= hi[1]; ++j) {
      for (std::size_t i = lo[0]; i <= hi[0]; ++i) {
        const std::size_t q = i + dims[0] * (j + dims[1] * k);
        if (!d.bits()[q]) continue;
        const Point c = d.center(i, j, k);
        double r2 = 0.0;
        for (int a = 0; a < d.dim(); ++a) r2 += (c[a] - x[a]) * (c[a] - x[a]);
        const double r = std::sqrt(r2);
        if (r <= small_r) {
          v[q] = 1.0;
        } else if (r < big_r) {
          v[q] = smoothstep(m, (big_r - r) / gap);
        }
      }
    }
  }
  Cutoff out{SampledFunction(d, std::move(v), m), 0.0};
  out.c_tilde = max_abs(gradient_magnitude(out.eta)) * gap;
  for (const MultiIndex& alpha : multi_indices(d.dim(), m)) {
    const int order = alpha[0] + alpha[1] + alpha[2];
    if (order == 0) continue;
    out.c_tilde = std::max(out.c_tilde, max_abs(derivative(out.eta, alpha)) * std::pow(gap, order));
  }
  return out;
}

double harness_sobolev_norm(const SampledFunction& f, const YoungFunction& a, int m) {
  return sobolev_norm(f, a, m, m == 1 ? SobolevConvention::gradient_magnitude : SobolevConvention::multi_index);
}

ProbeResult embedding_probe(const YoungFunction& a, const YoungFunction& target, const EmbeddingContext& ctx,
                            const std::vector<ProbeMember>& family) {
  if (family.empty()) throw Error("embedding_probe: empty family");
  ProbeResult res;
  for (const ProbeMember& p : family) {
    const double lhs = luxemburg_norm(p.f, target);
    const double rhs = harness_sobolev_norm(p.f, a, ctx.m);
    if (rhs == 0.0) {
      if (lhs > 0.0) throw Error("embedding_probe: '" + p.label + "' has zero Sobolev norm but nonzero target norm");
      continue;
    }
    const double ratio = lhs / rhs;
    res.ratios.emplace_back(p.label, ratio);
    if (ratio > res.c_e) {
      res.c_e = ratio;
      res.argmax = p.label;
    }
  }
  return res;
}

std::vector<ProbeMember> default_probe_family(const RasterDomain& d, int m, std::uint64_t seed,
                                              std::size_t centers) {
  std::vector<ProbeMember> family;
  const auto pts = random_points(d, centers, seed);
  for (std::size_t p = 0; p < pts.size(); ++p) {
    for (double r : kFamilyRadii) {
      if (r / 2.0 < 2.0 * d.h() || d.ball_count(pts[p], r) < kMinHalvingCells) continue;
      std::ostringstream label;
      label << "cutoff center " << p << " R=" << r;
      family.push_back({label.str(), cutoff(d, pts[p], r, r / 2.0, m).eta});
    }
  }
  family.push_back({"constant 1", SampledFunction::from_field(d, [](const Point&) { return 1.0; }, m)});
  for (int a = 0; a < d.dim(); ++a) {
    family.push_back({"x" + std::to_string(a + 1),
                      SampledFunction::from_field(d, [a](const Point& y) { return y[a]; }, m)});
  }
  family.push_back({"x1*x2", SampledFunction::from_field(d, [](const Point& y) { return y[0] * y[1]; }, m)});
  family.push_back({"x1^2", SampledFunction::from_field(d, [](const Point& y) { return y[0] * y[0]; }, m)});
  return family;
}

RadiusChain radius_chain(const RasterDomain& d, const Point& x, double big_r) {
  if (!(big_r > 0.0) || big_r > 1.0) throw Error("radius_chain: need 0 < R <= 1");
  if (!d.contains(x)) throw Error("radius_chain: center is not in the domain");
  const std::size_t start = d.ball_count(x, big_r);
  if (start < kMinHalvingCells) {
    const double factor = std::pow(static_cast<double>(kMinHalvingCells) / std::max<std::size_t>(start, 1),
                                   1.0 / d.dim());
    throw Error("radius_chain: resolution exhausted; refine h by a factor of at least " + std::to_string(factor));
  }
  RadiusChain chain;
  double r = big_r;
  while (d.ball_count(x, r) >= kMinHalvingCells) {
    const double next = halving_radius(d, x, r);
    ChainStep s;
    s.r_outer = r;
    s.r_inner = next;
    s.measure_outer = ball_measure(d, x, r);
    s.measure_inner = ball_measure(d, x, next);
    s.half_residual = s.measure_inner / s.measure_outer - 0.5;
    chain.steps.push_back(s);
    r = next;
  }
  chain.terminal_radius = r;
  chain.telescoped = big_r - r;
  return chain;
}

HarnessSetup prepare_harness(const RasterDomain& d, const YoungFunction& a, const EmbeddingContext& ctx,
                             const HarnessOptions& opts) {
  if (ctx.n != d.dim()) throw Error("harness: context dimension differs from the raster dimension");
  HarnessSetup s{ctx, a, false, 0.0, integrability_gate(a, ctx), {}, IndexVerdict::indeterminate, false,
                 YoungFunction::linear(), "", {}, {}, {}, {}, opts.seed};
  if (!s.gate.pass()) {
    // A may be changed near zero without changing W^{m,A} on sets of finite measure.
    s.a = linearize_near_zero(a, opts.linearize_at);
    s.modified_near_zero = true;
    s.s_star = opts.linearize_at;
    s.gate = integrability_gate(s.a, ctx);
    if (!s.gate.pass()) throw Error("harness: integrability gate fails even after the change near zero");
  }
  s.boyd = boyd_upper_index(s.a);
  s.boyd_verdict = index_below(s.boyd, static_cast<double>(ctx.n) / ctx.m);
  if (s.boyd_verdict == IndexVerdict::not_below || s.boyd_verdict == IndexVerdict::indeterminate) {
    throw Error("harness: Boyd precondition I_A < n/m does not hold (index " + std::to_string(s.boyd.index) + ")");
  }
  s.boyd_boundary_flag = s.boyd_verdict == IndexVerdict::boundary;

  if (ctx.m == 1) {
    const GlueResult glue = glue_target(s.a, first_order_target(s.a, ctx));
    s.target = glue.target;
    s.glue_s1 = glue.s1;
    s.glue_s2 = glue.s2;
    s.target_kind = "glued first-order target";
  } else {
    s.target = higher_order_target(s.a, ctx).target;
    s.target_kind = "higher-order target";
  }

  RatioRange range;
  range.lo = std::min(kRatioThreshold, 1.0 / d.measure()) / 2.0;
  range.hi = std::max(1e8, 4.0 / (static_cast<double>(kMinHalvingCells) * d.cell_volume()));
  range.per_decade = 20;
  s.ratio = ratio_decay_check(s.a, s.target, ctx, range);

  s.family_probe = embedding_probe(s.a, s.target, ctx, default_probe_family(d, ctx.m, opts.seed, opts.family_centers));
  return s;
}

NecessityReport necessity_verdict(const HarnessSetup& setup, const RasterDomain& d, const Point& x, double big_r) {
  const EmbeddingContext& ctx = setup.ctx;
  const int m = ctx.m;
  const double n = ctx.n;
  NecessityReport rep;
  rep.domain_id = domain_label(d);
  rep.young_id = setup.a.describe();
  rep.ctx = ctx;
  rep.center = x;
  rep.radius = big_r;
  rep.disclaimer = kHarnessDisclaimer;

  const RadiusChain chain = radius_chain(d, x, big_r);
  rep.measure = chain.steps.front().measure_outer;
  rep.terminal_radius = chain.terminal_radius;
  rep.telescoped = chain.telescoped;
  rep.r0 = std::min(kRatioThreshold, 1.0 / rep.measure);

  rep.c_e = setup.family_probe.c_e;
  for (const ChainStep& st : chain.steps) {
    StepRow row;
    row.step = st;
    row.gap = st.r_outer - st.r_inner;
    const Cutoff cut = cutoff(d, x, st.r_outer, st.r_inner, m);
    row.c_tilde = cut.c_tilde;
    row.target_norm = luxemburg_norm(cut.eta, setup.target);
    row.sobolev_norm = harness_sobolev_norm(cut.eta, setup.a, m);
    rep.c_e = std::max(rep.c_e, row.target_norm / row.sobolev_norm);
    rep.c_tilde = std::max(rep.c_tilde, row.c_tilde);
    row.chi_lower = chi_norm_closed(setup.target, st.measure_inner);
    row.rho = inverse_ratio(setup.target, setup.a, st.measure_outer) * std::pow(st.measure_outer, -m / n);
    row.ratio_to_density = st.r_outer / std::pow(st.measure_outer, 1.0 / n);
    rep.rows.push_back(row);
  }

  // c0: sup of rho over r >= r0, from the tabulated check and the chain's own levels.
  const double step_below = std::pow(10.0, -1.0 / static_cast<double>(20));
  for (const auto& [r, rho] : setup.ratio.table) {
    if (r >= rep.r0 * step_below) rep.c0 = std::max(rep.c0, rho);
  }
  for (const StepRow& row : rep.rows) rep.c0 = std::max(rep.c0, row.rho);

  const double k = norm_count(ctx);
  rep.c4 = k * rep.c_e * std::max(1.0, rep.c_tilde);
  rep.c3 = std::pow(rep.c4 * rep.c0, 1.0 / m);
  rep.big_c = rep.c3 / (1.0 - std::pow(2.0, -1.0 / n));
  rep.final_ratio = big_r / std::pow(rep.measure, 1.0 / n);

  const double cell = d.cell_volume();
  const double first_ratio = rep.rows.front().ratio_to_density;
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    StepRow& row = rep.rows[i];
    const ChainStep& st = row.step;
    const double gap_m = std::pow(row.gap, m);
    row.cutoff_bound = k * std::max(1.0, row.c_tilde) / gap_m * chi_norm_closed(setup.a, st.measure_outer);
    row.cutoff_bound_holds = row.sobolev_norm <= row.cutoff_bound * (1.0 + 1e-9);
    row.rhs_step = rep.c4 * inverse_ratio(setup.target, setup.a, st.measure_outer);
    row.rhs_final = rep.c4 * rep.c0 * std::pow(st.measure_outer, m / n);
    row.auto_pass = st.measure_outer > 1.0 / rep.r0;
    row.step_holds = row.auto_pass || gap_m <= row.rhs_step * (1.0 + 1e-9);
    row.final_holds = row.auto_pass || gap_m <= row.rhs_final * (1.0 + 1e-9);
    row.chain_link = row.auto_pass || row.rhs_step <= row.rhs_final * (1.0 + 1e-9);

    const double scaled = std::abs(st.half_residual) * st.measure_inner / (2.0 * cell);
    rep.max_half_residual_scaled = std::max(rep.max_half_residual_scaled, scaled);
    if (row.ratio_to_density > kDegradeFactor * first_ratio) rep.margin_degrades = true;

    if (!row.step_holds) rep.flags.push_back("per-step bound fails at step " + std::to_string(i));
    if (!row.final_holds) rep.flags.push_back("final per-step bound fails at step " + std::to_string(i));
    if (!row.cutoff_bound_holds) rep.flags.push_back("cut-off norm exceeds its bound at step " + std::to_string(i));
    if (!row.chain_link) rep.flags.push_back("bound chain inconsistent at step " + std::to_string(i));
  }
  rep.half_invariant = rep.max_half_residual_scaled <= 1.0;
  if (!rep.half_invariant) rep.flags.push_back("half-measure invariant violated");
  if (rep.margin_degrades) rep.flags.push_back("R_i / |B_{R_i}|^{1/n} grows along the chain");
  if (setup.modified_near_zero) {
    std::ostringstream os;
    os << "A replaced by its tangent line on [0, " << setup.s_star << "]";
    rep.flags.push_back(os.str());
  }
  if (setup.boyd_boundary_flag) rep.flags.push_back("Boyd index within 0.05 of n/m");

  rep.pass = rep.final_ratio <= rep.big_c;
  rep.verdict = rep.pass ? "pass" : "fail";
  return rep;
}

}  // namespace orliczkit
