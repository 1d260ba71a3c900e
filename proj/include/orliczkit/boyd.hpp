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

#include <array>
#include <optional>
#include <vector>

#include "orliczkit/young.hpp"

namespace orliczkit {

/// h_A(t) = limsup_{s->inf} A^{-1}(s t) / A^{-1}(s), estimated over the last
/// three decades of the abscissa grid of A.
struct HEstimate {
  double t = 0.0;
  /// Largest ratio over the three decades.
  double value = 0.0;
  std::array<double, 3> decade_max{};
  /// Abscissa where each decade maximum is attained.
  std::array<double, 3> decade_arg{};
  /// Decade maxima extrapolated linearly in 1 / log s to s = inf.
  double extrapolated = 0.0;
  bool stable = true;
};

HEstimate h_upper(const YoungFunction& a, double t);

struct BoydEstimate {
  /// inf over t of log t / log h(t), using the extrapolated h.
  double index = 0.0;
  /// Same infimum from the undecorated decade maxima.
  double raw_index = 0.0;
  /// Every h estimate passed the 5% decade-agreement gate.
  bool stable = true;
  /// No h estimate passed it.
  bool indeterminate = false;
  std::vector<HEstimate> table;
};

BoydEstimate boyd_upper_index(const YoungFunction& a);

enum class IndexVerdict { below, not_below, boundary, indeterminate };
const char* to_string(IndexVerdict v);

inline constexpr double kBoundaryBand = 0.05;

/// Answers I_A < threshold, reporting boundary when |I_A - threshold| < 0.05.
IndexVerdict index_below(const BoydEstimate& est, double threshold);

enum class GrowthVariant { ii, iii };

struct GrowthConditionResult {
  bool pass = false;
  /// sigma (iii) or k (ii) of the first passing pair.
  double scale = 0.0;
  /// c (iii); unused for ii.
  double constant = 0.0;
  /// Abscissa range the inequality was checked on.
  double witness_lo = 0.0;
  double witness_hi = 0.0;
};

/// (iii): A(sigma t) <= c sigma^{1/alpha} A(t) on the tail samples, sigma in
/// {2, 4, 8, 16}, c in {1/64, ..., 63/64}.
/// (ii): integral over [1, t] of A~(s) / s^{beta + 1} <= A~(k t) / t^beta with
/// beta = 1/(1 - alpha), k in {2, 4, ..., 1024}.
GrowthConditionResult growth_condition(const YoungFunction& a, double alpha, GrowthVariant variant);

}  // namespace orliczkit
