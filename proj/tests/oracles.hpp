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

// Reference values computed without the library's algorithms: closed forms,
// dense brute-force scans and direct cell enumeration.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "orliczkit/raster.hpp"

namespace oracle {

inline double conjugate_exponent(double p) { return p / (p - 1.0); }

/// Conjugate of s^p: (p - 1) p^{-p'} t^{p'}.
inline double power_conjugate(double p, double t) {
  const double q = conjugate_exponent(p);
  return (p - 1.0) * std::pow(p, -q) * std::pow(t, q);
}

/// sup over a dense geometric r-grid of s r - A(r).
inline double brute_conjugate(const std::function<double(double)>& a, double s, double lo = 1e-10,
                              double hi = 1e10, int per_decade = 4000) {
  const double decades = std::log10(hi / lo);
  const int count = static_cast<int>(decades * per_decade);
  double best = 0.0;
  for (int k = 0; k <= count; ++k) {
    const double r = lo * std::pow(10.0, decades * k / count);
    best = std::max(best, s * r - a(r));
  }
  return best;
}

inline double power_log(double p, double lambda, double s) {
  return std::pow(s, p) * std::pow(std::log(std::numbers::e + s), lambda);
}

/// Composite Simpson rule in u = log s over [a, b].
inline double simpson_log(const std::function<double(double)>& f, double a, double b, int panels = 20000) {
  const double ua = std::log(a), ub = std::log(b);
  const double du = (ub - ua) / panels;
  double sum = 0.0;
  for (int k = 0; k <= panels; ++k) {
    const double u = ua + k * du;
    const double w = (k == 0 || k == panels) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
    sum += w * f(std::exp(u)) * std::exp(u);
  }
  return sum * du / 3.0;
}

inline double sobolev_exponent(double n, double p) { return n * p / (n - p); }
inline double higher_exponent(double n, double m, double p) { return n * p / (n - m * p); }

/// Phi for A = s^p: K s^{p' - n'} with K = (p - 1) p^{-p'} / (p' - n').
inline double phi_power(double n, double p, double s) {
  const double pp = conjugate_exponent(p), np = n / (n - 1.0);
  return (p - 1.0) * std::pow(p, -pp) / (pp - np) * std::pow(s, pp - np);
}

inline double unit_ball_volume(int n) { return n == 2 ? std::numbers::pi : 4.0 * std::numbers::pi / 3.0; }

/// Squared distances from x to every occupied cell center, by a full scan.
inline std::vector<double> all_distances(const orliczkit::RasterDomain& d, const orliczkit::Point& x) {
  std::vector<double> out;
  const auto& dims = d.dims();
  for (std::size_t k = 0; k < dims[2]; ++k) {
    for (std::size_t j = 0; j < dims[1]; ++j) {
      for (std::size_t i = 0; i < dims[0]; ++i) {
        if (!d.occupied(i, j, k)) continue;
        const auto c = d.center(i, j, k);
        double s = 0.0;
        for (int a = 0; a < d.dim(); ++a) s += (c[a] - x[a]) * (c[a] - x[a]);
        out.push_back(s);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t brute_ball_count(const orliczkit::RasterDomain& d, const orliczkit::Point& x, double r) {
  const auto dist = all_distances(d, x);
  return static_cast<std::size_t>(std::upper_bound(dist.begin(), dist.end(), r * r) - dist.begin());
}

/// Radius of the ceil(N/2)-th nearest cell center among the N inside B(x, R).
inline double brute_halving(const orliczkit::RasterDomain& d, const orliczkit::Point& x, double big_r) {
  const auto dist = all_distances(d, x);
  const std::size_t n = static_cast<std::size_t>(std::upper_bound(dist.begin(), dist.end(), big_r * big_r) - dist.begin());
  return std::sqrt(dist[(n + 1) / 2 - 1]);
}

/// Retained area fraction of the carpet: stage k removes a fraction 4^{-k} of every cell.
inline double carpet_fraction(int stages) {
  double f = 1.0;
  for (int k = 1; k <= stages; ++k) f *= 1.0 - std::pow(4.0, -k);
  return f;
}

}  // namespace oracle
