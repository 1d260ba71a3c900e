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

#include <optional>
#include <utility>
#include <vector>

#include "orliczkit/young.hpp"

namespace orliczkit {

/// Space dimension n and Sobolev order m, 1 <= m < n.
struct EmbeddingContext {
  int n = 2;
  int m = 1;

  static EmbeddingContext make(int n, int m = 1);

  /// n' = n / (n - 1).
  double n_prime() const { return static_cast<double>(n) / (n - 1); }
  /// n / (n - m); equals n' when m = 1.
  double order_exponent() const { return static_cast<double>(n) / (n - m); }
};

enum class GateVerdict { pass, fail, inconclusive };
const char* to_string(GateVerdict v);

/// Integral over (0, upper] of a power-like integrand, evaluated on the
/// substitution t = e^u with Richardson-refined trapezoids.
struct ImproperIntegral {
  GateVerdict verdict = GateVerdict::inconclusive;
  double value = 0.0;
  /// kappa in g(u) ~ e^{kappa u} as u -> -inf (g = t f(t)); +inf if g vanishes.
  double decay_rate = 0.0;
  /// Partial integrals with the lower limit at u = log(upper) - 10, -20, -30, -40.
  std::vector<double> partials;
  /// Relative change between the totals extrapolated from u = -30 and u = -40.
  double refinement_change = 0.0;
};

ImproperIntegral improper_integral_near_zero(const ScalarFn& f, double upper = 1.0);

struct GateReport {
  ImproperIntegral primal;  ///< integral of (s / A(s))^{m/(n-m)}
  ImproperIntegral dual;    ///< integral of A~(t) / t^{1 + n/(n-m)}
  bool agree() const { return primal.verdict == dual.verdict; }
  bool pass() const { return primal.verdict == GateVerdict::pass && dual.verdict == GateVerdict::pass; }
};

GateReport integrability_gate(const YoungFunction& a, const EmbeddingContext& ctx);

/// Phi(s) = integral over (0, s] of A~(t) / t^{1 + q} with q = n/(n-m).
MonotoneFunction phi_n(const YoungFunction& a, const EmbeddingContext& ctx);
MonotoneFunction phi_from_conjugate(const YoungFunction& conj, double q);

/// A_n(s) = integral over (0, s] of r^{n'-1} (Phi_n^{-1}(r^{n'}))^{n'} (left inverse).
YoungFunction first_order_target(const YoungFunction& a, const EmbeddingContext& ctx);

struct GlueResult {
  YoungFunction target;
  double s1 = 0.0;
  double s2 = 0.0;
};

/// A on [0, s1], A_n on [s2, inf), the chord in between.
GlueResult glue_target(const YoungFunction& a, const YoungFunction& a_n);

struct HigherOrderTarget {
  YoungFunction target;
  MonotoneFunction h;
  /// H_{n/m} is bounded (or grows slower than any power): the target is
  /// essentially L^infinity.
  bool bounded_regime = false;
};

/// A_{n/m} = A o H_{n/m}^{-1} (left inverse).
HigherOrderTarget higher_order_target(const YoungFunction& a, const EmbeddingContext& ctx);

struct ProofScales {
  MonotoneFunction phi;                ///< Phi_n, or Phi_{n/m} when m > 1
  MonotoneFunction c;                  ///< C_n or C_{n/m}
  std::optional<MonotoneFunction> d;   ///< D_n (m = 1)
  std::optional<MonotoneFunction> e;   ///< E_{n/m} (m > 1)

  // C^{-1}(r) = r^{1/n'} / D^{-1}(r), m = 1.
  double identity_worst_error = 0.0;
  double identity_worst_r = 0.0;
  std::size_t identity_points = 0;

  // C(s/2) <= A_n(s) <= C(s), m = 1; worst ratios C(s/2)/A_n(s) and A_n(s)/C(s).
  double sandwich_lower = 0.0;
  double sandwich_upper = 0.0;

  // E(c1 s) <= A_{n/m}(s) <= E(c2 s), m > 1.
  std::optional<double> c1;
  std::optional<double> c2;
};

ProofScales proof_scales(const YoungFunction& a, const EmbeddingContext& ctx);

struct RatioRange {
  double lo = 1e3;
  double hi = 1e8;
  std::size_t per_decade = 10;
};

struct RatioDecayReport {
  double r0 = 0.0;
  double c0 = 0.0;
  double slope = 0.0;
  double sup_over_inf = 0.0;
  bool saturated = false;
  bool pass = false;
  std::vector<std::pair<double, double>> table;  ///< (r, rho(r))
};

/// rho(r) = target^{-1}(2r) / A^{-1}(r) * r^{m/n} on a log grid (right inverses).
/// Passes when the last-decade log-slope is at most 0.05.
RatioDecayReport ratio_decay_check(const YoungFunction& a, const YoungFunction& target,
                                   const EmbeddingContext& ctx, const RatioRange& range = {});

}  // namespace orliczkit
