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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orliczkit/boyd.hpp"
#include "orliczkit/norms.hpp"
#include "orliczkit/raster.hpp"
#include "orliczkit/sobolev_targets.hpp"

namespace orliczkit {

struct Cutoff {
  SampledFunction eta;
  /// max over |alpha| <= m of max |D^alpha eta| (R - R~)^{|alpha|}, and of the
  /// Euclidean gradient times (R - R~).
  double c_tilde = 0.0;
};

/// Piecewise polynomial smoothstep of degree 2m - 1: sigma(0) = 0, sigma(1) = 1,
/// first m - 1 derivatives vanish at both ends (m = 1 is the linear ramp).
double smoothstep(int m, double s);

/// eta(y) = sigma_m((R - |y - x|) / (R - R~)) clipped to [0, 1].
Cutoff cutoff(const RasterDomain& d, const Point& x, double big_r, double small_r, int m);

struct ProbeMember {
  std::string label;
  SampledFunction f;
};

struct ProbeResult {
  double c_e = 0.0;
  std::string argmax;
  std::vector<std::pair<std::string, double>> ratios;
};

/// Norm used on the Sobolev side: the gradient form for m = 1, multi-indices otherwise.
double harness_sobolev_norm(const SampledFunction& f, const YoungFunction& a, int m);

/// c_e = max over the family of ||f||_target / ||f||_{W^{m,A}}.
ProbeResult embedding_probe(const YoungFunction& a, const YoungFunction& target, const EmbeddingContext& ctx,
                            const std::vector<ProbeMember>& family);

/// Cut-offs at `centers` random points and five radii, plus low-degree polynomial fields.
std::vector<ProbeMember> default_probe_family(const RasterDomain& d, int m, std::uint64_t seed,
                                              std::size_t centers = 20);

struct ChainStep {
  double r_outer = 0.0;
  double r_inner = 0.0;
  double measure_outer = 0.0;
  double measure_inner = 0.0;
  /// |B_{R_{i+1}}| / |B_{R_i}| - 1/2.
  double half_residual = 0.0;
};

struct RadiusChain {
  std::vector<ChainStep> steps;
  double terminal_radius = 0.0;
  double telescoped = 0.0;  ///< R - terminal radius
};

/// R_0 = R, R_{i+1} = halving radius of R_i, until fewer than 16 cells remain.
RadiusChain radius_chain(const RasterDomain& d, const Point& x, double big_r);

struct HarnessOptions {
  std::uint64_t seed = 1;
  std::size_t family_centers = 20;
  /// Radius where A is replaced by its tangent line if the integrability gate fails.
  double linearize_at = 1.0;
};

/// Everything a batch of verdicts on one (domain, A, ctx) shares.
struct HarnessSetup {
  EmbeddingContext ctx;
  YoungFunction a;
  bool modified_near_zero = false;
  double s_star = 0.0;
  GateReport gate;
  BoydEstimate boyd;
  IndexVerdict boyd_verdict = IndexVerdict::indeterminate;
  bool boyd_boundary_flag = false;
  YoungFunction target;
  std::string target_kind;
  std::optional<double> glue_s1, glue_s2;
  RatioDecayReport ratio;
  ProbeResult family_probe;
  std::uint64_t seed = 1;
};

HarnessSetup prepare_harness(const RasterDomain& d, const YoungFunction& a, const EmbeddingContext& ctx,
                             const HarnessOptions& opts = {});

struct StepRow {
  ChainStep step;
  double gap = 0.0;           ///< R_i - R_{i+1}
  double c_tilde = 0.0;       ///< this step's cut-off
  double target_norm = 0.0;   ///< ||eta||_target
  double sobolev_norm = 0.0;  ///< ||eta||_{W^{m,A}}
  double chi_lower = 0.0;     ///< ||chi_{B_{R_{i+1}}}||_target (closed form)
  double cutoff_bound = 0.0;   ///< K max{1, c~} / gap^m ||chi_{B_{R_i}}||_A
  bool cutoff_bound_holds = false;
  double rho = 0.0;           ///< target^{-1}(2/B) / A^{-1}(1/B) * B^{-m/n}
  double rhs_step = 0.0;      ///< right side of the per-step bound with the measured constants
  double rhs_final = 0.0;     ///< c_3^m |B_{R_i}|^{m/n}
  bool step_holds = false;
  bool final_holds = false;
  bool chain_link = false;    ///< rhs_step <= rhs_final
  bool auto_pass = false;     ///< |B| > 1/r0: nothing to prove
  double ratio_to_density = 0.0;  ///< R_i / |B_{R_i}|^{1/n}
};

struct NecessityReport {
  std::string domain_id;
  std::string young_id;
  EmbeddingContext ctx;
  Point center{};
  double radius = 0.0;
  double measure = 0.0;
  std::vector<StepRow> rows;
  double terminal_radius = 0.0;
  double telescoped = 0.0;
  double c_e = 0.0;
  double c_tilde = 0.0;
  double c0 = 0.0;
  double r0 = 0.0;
  /// c_3 (m = 1) or (c_4 c_0)^{1/m} with c_4 = K c_e max{1, c~}.
  double c3 = 0.0;
  double c4 = 0.0;
  double big_c = 0.0;
  double final_ratio = 0.0;  ///< R / |B_R|^{1/n}
  double max_half_residual_scaled = 0.0;  ///< max |residual| |B_{R_{i+1}}| / (2 h^n)
  bool half_invariant = true;
  bool margin_degrades = false;
  bool pass = false;
  std::string verdict;
  std::vector<std::string> flags;
  std::string disclaimer;
};

NecessityReport necessity_verdict(const HarnessSetup& setup, const RasterDomain& d, const Point& x, double big_r);

inline constexpr const char* kHarnessDisclaimer =
    "c_e is the largest norm ratio over a finite test family, so the verdict checks the internal "
    "consistency of the proof chain on this raster; it does not certify the embedding.";

}  // namespace orliczkit
