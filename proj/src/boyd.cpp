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

#include "orliczkit/boyd.hpp"

#include <algorithm>

namespace orliczkit {
namespace {

constexpr std::size_t kPerDecade = 16;
constexpr double kStabilityTol = 0.05;

/// Abscissae of the last three decades of the table, one row per decade.
std::array<std::vector<double>, 3> tail_decades(const SampleTable& table) {
  const double top = table.abscissae().back();
  std::array<std::vector<double>, 3> out;
  for (std::size_t d = 0; d < 3; ++d) {
    const double hi = top / std::pow(10.0, static_cast<double>(d));
    out[2 - d] = log_grid(hi / 10.0, hi, kPerDecade);
  }
  return out;
}

std::vector<double> tail_samples(const SampleTable& table) {
  std::vector<double> xs;
  for (const auto& dec : tail_decades(table)) xs.insert(xs.end(), dec.begin(), dec.end());
  return xs;
}

double index_from_h(double t, double h) {
  if (!(h > 0.0) || h >= 1.0) return kInf;
  return std::log(t) / std::log(h);
}

}  // namespace

HEstimate h_upper(const YoungFunction& a, double t) {
  if (!(t > 0.0 && t < 1.0)) throw Error("h_upper: t must lie in (0, 1)");
  HEstimate est;
  est.t = t;
  const auto decades = tail_decades(a.table());
  for (std::size_t d = 0; d < 3; ++d) {
    for (double x : decades[d]) {
      const double level = a(x);
      if (!std::isfinite(level) || level <= 0.0) continue;
      const InverseValue inv = generalized_inverse(a, level * t, InverseSide::right);
      const double ratio = inv.value / x;
      if (ratio > est.decade_max[d]) {
        est.decade_max[d] = ratio;
        est.decade_arg[d] = x;
      }
    }
  }
  const auto [lo, hi] = std::minmax_element(est.decade_max.begin(), est.decade_max.end());
  est.value = *hi;
  est.stable = *hi > 0.0 && (*hi - *lo) <= kStabilityTol * *hi;

  std::vector<double> xs, ys;
  for (std::size_t d = 0; d < 3; ++d) {
    if (est.decade_max[d] > 0.0 && est.decade_arg[d] > 1.0) {
      xs.push_back(1.0 / std::log(est.decade_arg[d]));
      ys.push_back(std::log(est.decade_max[d]));
    }
  }
  est.extrapolated = xs.size() >= 2 ? std::exp(fit_line(xs, ys).intercept) : est.value;
  return est;
}

BoydEstimate boyd_upper_index(const YoungFunction& a) {
  BoydEstimate out;
  out.index = kInf;
  out.raw_index = kInf;
  std::size_t stable = 0;
  for (double t : log_grid(1e-3, 1.0, 66)) {
    if (t <= 1e-3 || t >= 1.0) continue;  // open interval: 64 interior points
    HEstimate h = h_upper(a, t);
    if (h.stable) ++stable;
    out.index = std::min(out.index, index_from_h(t, h.extrapolated));
    out.raw_index = std::min(out.raw_index, index_from_h(t, h.value));
    out.table.push_back(h);
  }
  out.stable = stable == out.table.size();
  out.indeterminate = stable == 0;
  return out;
}

const char* to_string(IndexVerdict v) {
  switch (v) {
    case IndexVerdict::below: return "below";
    case IndexVerdict::not_below: return "not_below";
    case IndexVerdict::boundary: return "boundary";
    case IndexVerdict::indeterminate: return "indeterminate";
  }
  return "?";
}

IndexVerdict index_below(const BoydEstimate& est, double threshold) {
  if (est.indeterminate) return IndexVerdict::indeterminate;
  if (std::abs(est.index - threshold) < kBoundaryBand) return IndexVerdict::boundary;
  return est.index < threshold ? IndexVerdict::below : IndexVerdict::not_below;
}

GrowthConditionResult growth_condition(const YoungFunction& a, double alpha, GrowthVariant variant) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error("growth_condition: alpha must lie in (0, 1)");
  GrowthConditionResult res;

  if (variant == GrowthVariant::iii) {
    const auto xs = tail_samples(a.table());
    res.witness_lo = xs.front();
    res.witness_hi = xs.back();
    std::vector<double> ax(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) ax[k] = a(xs[k]);
    for (double sigma : {2.0, 4.0, 8.0, 16.0}) {
      // Worst ratio A(sigma t) / (sigma^{1/alpha} A(t)) over the tail.
      double worst = 0.0;
      for (std::size_t k = 0; k < xs.size(); ++k) {
        worst = std::max(worst, a(sigma * xs[k]) / (std::pow(sigma, 1.0 / alpha) * ax[k]));
      }
      for (int k = 1; k < 64; ++k) {
        const double c = k / 64.0;
        if (worst <= c * (1.0 + 1e-12)) {
          res.pass = true;
          res.scale = sigma;
          res.constant = c;
          return res;
        }
      }
    }
    return res;
  }

  const YoungFunction conj = conjugate(a);
  const double beta = 1.0 / (1.0 - alpha);
  const ScalarFn integrand = [&conj, beta](double s) { return conj(s) / std::pow(s, beta + 1.0); };
  const auto xs = tail_samples(conj.table());
  res.witness_lo = xs.front();
  res.witness_hi = xs.back();
  // Integral from 1 to each sample, accumulated left to right.
  std::vector<double> lhs(xs.size());
  double acc = integrate_log(integrand, 1.0, xs.front());
  lhs[0] = acc;
  for (std::size_t k = 1; k < xs.size(); ++k) {
    acc += integrate_log(integrand, xs[k - 1], xs[k]);
    lhs[k] = acc;
  }
  for (int j = 1; j <= 10; ++j) {
    const double kk = std::ldexp(1.0, j);
    bool ok = true;
    for (std::size_t k = 0; k < xs.size() && ok; ++k) {
      ok = lhs[k] <= conj(kk * xs[k]) / std::pow(xs[k], beta) * (1.0 + 1e-12);
    }
    if (ok) {
      res.pass = true;
      res.scale = kk;
      return res;
    }
  }
  return res;
}

}  // namespace orliczkit
