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
#include <span>
#include <string>
#include <vector>

#include "orliczkit/numeric.hpp"
#include "orliczkit/sample_table.hpp"

namespace orliczkit {

/// Relative tolerance for discrete convexity and monotonicity checks.
inline constexpr double kConvexityTol = 1e-9;

enum class YoungFamily { power, power_log, linear, table };

/// A Young function A: convex, nondecreasing, A(0) = 0. Closed-form families
/// evaluate exactly; every function also carries a sample table on a log grid
/// that the sweeping algorithms (conjugation, quadrature) run over.
class YoungFunction {
 public:
  /// coeff * s^p, p >= 1.
  static YoungFunction power(double p, double coeff = 1.0, const GridSpec& grid = {});
  /// s^p * log(e + s)^lambda.
  static YoungFunction power_log(double p, double lambda, const GridSpec& grid = {});
  /// coeff * s.
  static YoungFunction linear(double coeff = 1.0, const GridSpec& grid = {});
  /// A(s) = integral of the density a over [0, s]. The density is interpolated
  /// log-log between the given (r_k, a_k) samples and must be nondecreasing.
  static YoungFunction from_density(std::span<const double> r, std::span<const double> a);
  /// Table-backed function. Validates every invariant.
  static YoungFunction from_table(SampleTable table);

  double operator()(double s) const;

  YoungFamily family() const { return family_; }
  std::span<const double> params() const { return params_; }
  const SampleTable& table() const { return table_; }

  std::optional<double> finite_bound() const { return table_.finite_bound(); }
  std::optional<double> zero_plateau() const { return table_.zero_plateau(); }

  /// Asymptotic law near infinity: exact for closed forms, fitted for tables.
  PowerLaw tail() const;
  /// Law near 0: exact for closed forms, fitted for tables.
  PowerLaw head() const;

  /// lim_{s->0} A(s)/s (> 0 only for linear-type behaviour at 0).
  double slope_at_zero() const;
  /// lim_{s->inf} A(s)/s when A has linear growth; +inf otherwise.
  double slope_at_infinity() const;

  std::string describe() const;

 private:
  YoungFunction(YoungFamily f, std::vector<double> params, SampleTable table)
      : family_(f), params_(std::move(params)), table_(std::move(table)) {}

  YoungFamily family_ = YoungFamily::table;
  std::vector<double> params_;
  SampleTable table_;
};

/// Nondecreasing sample-table function (Phi_n, H_{n/m}, C_n, D_n, ...).
class MonotoneFunction {
 public:
  MonotoneFunction() = default;
  explicit MonotoneFunction(SampleTable table);

  double operator()(double s) const { return table_(s); }
  const SampleTable& table() const { return table_; }
  std::optional<double> finite_bound() const { return table_.finite_bound(); }
  double supremum() const { return table_.supremum(); }

 private:
  SampleTable table_;
};

/// Outcome of checking the sample invariants of a table.
struct InvariantReport {
  bool nondecreasing = true;
  bool convex = true;
  bool ratio_nondecreasing = true;
  bool tail_superlinear = true;
  std::string first_violation;

  bool young() const { return nondecreasing && convex && ratio_nondecreasing && tail_superlinear; }
};
InvariantReport check_young_invariants(const SampleTable& t);

// ---- generalized inverses ----------------------------------------------------

enum class InverseSide { left, right };

struct InverseValue {
  double value = 0.0;
  /// The requested level lies above the function's supremum; `value` is the
  /// search ceiling.
  bool saturated = false;
};

inline constexpr double kInverseCeiling = 1e150;

/// right: sup{s : F(s) <= r}; left: inf{s : F(s) >= r}. Bisection in log s.
InverseValue generalized_inverse(const ScalarFn& f, std::optional<double> bound, double r,
                                 InverseSide side);

InverseValue generalized_inverse(const YoungFunction& a, double r, InverseSide side);
InverseValue generalized_inverse(const MonotoneFunction& f, double r, InverseSide side);

// ---- calculus ----------------------------------------------------------------------

enum class ConjugateMethod {
  automatic,  ///< closed form where one exists, sweep otherwise
  numeric,    ///< always the monotone-argmax sweep
};

/// Young conjugate sup{s r - A(r) : r > 0}.
YoungFunction conjugate(const YoungFunction& a, ConjugateMethod method = ConjugateMethod::automatic,
                        const GridSpec& grid = {});

/// A-bar(s) = integral of A(r)/r over [0, s].
YoungFunction integral_mean(const YoungFunction& a);

enum class GrowthMode { global, near_infinity };
enum class GrowthVerdict { dominates, fails, inconclusive };

struct Dominance {
  GrowthVerdict verdict = GrowthVerdict::fails;
  double constant = 0.0;  ///< smallest passing c on the 2^k grid
  double witness = 0.0;   ///< failing abscissa when verdict == fails
  double exponent_gap = 0.0;
};

struct GrowthComparison {
  Dominance b_dominates_a;
  Dominance a_dominates_b;
  bool equivalent() const {
    return b_dominates_a.verdict == GrowthVerdict::dominates &&
           a_dominates_b.verdict == GrowthVerdict::dominates;
  }
};

/// Does B dominate A (A(s) <= B(c s)), and are they equivalent?
GrowthComparison compare_growth(const YoungFunction& a, const YoungFunction& b, GrowthMode mode,
                                double threshold = 1.0);

/// Replaces A on [0, s_star] by its tangent line a(s_star) s and shifts the rest
/// by a constant, keeping convexity and the behaviour near infinity.
YoungFunction linearize_near_zero(const YoungFunction& a, double s_star);

const char* to_string(YoungFamily f);
const char* to_string(GrowthVerdict v);

}  // namespace orliczkit
