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

#include "orliczkit/report.hpp"

#include <ostream>

#include "orliczkit/io.hpp"

namespace orliczkit {
namespace {

Json point_json(const Point& p, int n) {
  Json out = Json::array();
  for (int k = 0; k < n; ++k) out.push_back(p[k]);
  return out;
}

Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json ctx_json(const EmbeddingContext& ctx) { return Json{{"n", ctx.n}, {"m", ctx.m}}; }

// Writes non-finite doubles as strings; JSON has no numeral for them.
Json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

}  // namespace

Json to_json(const YoungFunction& a) {
  Json out{{"family", to_string(a.family())}, {"description", a.describe()}};
  out["params"] = Json::array();
  for (double p : a.params()) out["params"].push_back(p);
  out["samples"] = a.table().size();
  out["tail_exponent"] = a.tail().exponent;
  out["finite_bound"] = optional_json(a.finite_bound());
  return out;
}

Json to_json(const ImproperIntegral& r) {
  return Json{{"verdict", to_string(r.verdict)},
              {"value", number(r.value)},
              {"decay_rate", number(r.decay_rate)},
              {"partials", r.partials},
              {"refinement_change", number(r.refinement_change)}};
}

Json to_json(const GateReport& r) {
  return Json{{"primal", to_json(r.primal)}, {"dual", to_json(r.dual)}, {"agree", r.agree()}, {"pass", r.pass()}};
}

Json to_json(const RatioDecayReport& r) {
  Json table = Json::array();
  for (const auto& [x, rho] : r.table) table.push_back(Json::array({x, rho}));
  return Json{{"r0", r.r0},
              {"c0", r.c0},
              {"slope", r.slope},
              {"pass", r.pass},
              {"sup_over_inf", r.sup_over_inf},
              {"saturated", r.saturated},
              {"table", std::move(table)}};
}

Json to_json(const HEstimate& r) {
  return Json{{"t", r.t},
              {"value", r.value},
              {"decade_max", r.decade_max},
              {"decade_arg", r.decade_arg},
              {"extrapolated", r.extrapolated},
              {"stable", r.stable}};
}

Json to_json(const BoydEstimate& r, const std::vector<double>& thresholds) {
  Json table = Json::array();
  Json decades = Json::array();
  for (const auto& h : r.table) {
    table.push_back(Json::array({h.t, h.extrapolated}));
    decades.push_back(to_json(h));
  }
  Json verdicts = Json::object();
  for (double x : thresholds) verdicts["I_A < " + format_double(x)] = to_string(index_below(r, x));
  return Json{{"index", number(r.index)},
              {"raw_index", number(r.raw_index)},
              {"stable", r.stable},
              {"indeterminate", r.indeterminate},
              {"table", std::move(table)},
              {"verdicts", std::move(verdicts)},
              {"decades", std::move(decades)}};
}

Json to_json(const GrowthConditionResult& r) {
  return Json{{"pass", r.pass},
              {"scale", r.scale},
              {"constant", r.constant},
              {"witness_lo", r.witness_lo},
              {"witness_hi", r.witness_hi}};
}

Json to_json(const DensityReport& r, int n) {
  Json points = Json::array();
  for (const Point& p : r.points) points.push_back(point_json(p, n));
  Json values = Json::array();
  const std::size_t cols = r.radii.size();
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < cols; ++k) row.push_back(r.values[i * cols + k]);
    values.push_back(std::move(row));
  }
  return Json{{"protocol", r.protocol},
              {"inf", r.inf},
              {"argmin_point", point_json(r.argmin_point, n)},
              {"argmin_radius", r.argmin_radius},
              {"degenerates", r.degenerates},
              {"coarse_inf", optional_json(r.coarse_inf)},
              {"resolution_change", optional_json(r.resolution_change)},
              {"small_radius_slope", r.small_radius_slope},
              {"radii", r.radii},
              {"radius_min", r.radius_min},
              {"points", std::move(points)},
              {"values", std::move(values)}};
}

Json to_json(const HarnessSetup& s) {
  return Json{{"ctx", ctx_json(s.ctx)},
              {"young", to_json(s.a)},
              {"modified_near_zero", s.modified_near_zero},
              {"s_star", s.s_star},
              {"gate", to_json(s.gate)},
              {"boyd_index", number(s.boyd.index)},
              {"boyd_verdict", to_string(s.boyd_verdict)},
              {"target_kind", s.target_kind},
              {"target_tail_exponent", s.target.tail().exponent},
              {"glue_s1", optional_json(s.glue_s1)},
              {"glue_s2", optional_json(s.glue_s2)},
              {"ratio", Json{{"r0", s.ratio.r0}, {"c0", s.ratio.c0}, {"slope", s.ratio.slope}, {"pass", s.ratio.pass}}},
              {"family_c_e", s.family_probe.c_e},
              {"family_argmax", s.family_probe.argmax},
              {"seed", s.seed}};
}

Json to_json(const NecessityReport& r) {
  Json rows = Json::array();
  for (const StepRow& row : r.rows) {
    rows.push_back(Json{{"r_outer", row.step.r_outer},
                        {"r_inner", row.step.r_inner},
                        {"measure_outer", row.step.measure_outer},
                        {"measure_inner", row.step.measure_inner},
                        {"half_residual", row.step.half_residual},
                        {"gap", row.gap},
                        {"c_tilde", row.c_tilde},
                        {"target_norm", row.target_norm},
                        {"sobolev_norm", row.sobolev_norm},
                        {"chi_lower", row.chi_lower},
                        {"cutoff_bound", row.cutoff_bound},
                        {"cutoff_bound_holds", row.cutoff_bound_holds},
                        {"rho", row.rho},
                        {"rhs_step", row.rhs_step},
                        {"rhs_final", row.rhs_final},
                        {"step_holds", row.step_holds},
                        {"final_holds", row.final_holds},
                        {"chain_link", row.chain_link},
                        {"auto_pass", row.auto_pass},
                        {"ratio_to_density", row.ratio_to_density}});
  }
  return Json{{"domain_id", r.domain_id},
              {"young_id", r.young_id},
              {"ctx", ctx_json(r.ctx)},
              {"center", point_json(r.center, r.ctx.n)},
              {"radius", r.radius},
              {"measure", r.measure},
              {"rows", std::move(rows)},
              {"terminal_radius", r.terminal_radius},
              {"telescoped", r.telescoped},
              {"c_e", r.c_e},
              {"c_tilde", r.c_tilde},
              {"c0", r.c0},
              {"r0", r.r0},
              {"c3", r.c3},
              {"c4", r.c4},
              {"big_c", r.big_c},
              {"final_ratio", r.final_ratio},
              {"max_half_residual_scaled", r.max_half_residual_scaled},
              {"half_invariant", r.half_invariant},
              {"margin_degrades", r.margin_degrades},
              {"pass", r.pass},
              {"verdict", r.verdict},
              {"flags", r.flags},
              {"disclaimer", r.disclaimer}};
}

void write_chain_csv(std::ostream& os, const std::vector<NecessityReport>& reports) {
  os << "verdict,radius,step,r_outer,r_inner,measure_outer,measure_inner,half_residual,gap,c_tilde,"
        "target_norm,sobolev_norm,rho,rhs_step,rhs_final,step_holds,final_holds,ratio_to_density\n";
  for (std::size_t v = 0; v < reports.size(); ++v) {
    const NecessityReport& r = reports[v];
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      const StepRow& row = r.rows[i];
      os << v << ',' << format_double(r.radius) << ',' << i;
      for (double x : {row.step.r_outer, row.step.r_inner, row.step.measure_outer, row.step.measure_inner,
                       row.step.half_residual, row.gap, row.c_tilde, row.target_norm, row.sobolev_norm, row.rho,
                       row.rhs_step, row.rhs_final}) {
        os << ',' << format_double(x);
      }
      os << ',' << (row.step_holds ? 1 : 0) << ',' << (row.final_holds ? 1 : 0) << ','
         << format_double(row.ratio_to_density) << '\n';
    }
  }
}

void write_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

}  // namespace orliczkit
