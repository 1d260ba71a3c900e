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

#include "orliczkit/numeric.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>

namespace orliczkit {

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2) {
    throw Error("log_grid: need 0 < lo < hi and count >= 2");
  }
  std::vector<double> g(count);
  const double a = std::log(lo);
  const double step = (std::log(hi) - a) / static_cast<double>(count - 1);
  for (std::size_t k = 0; k < count; ++k) g[k] = std::exp(a + step * static_cast<double>(k));
  g.front() = lo;
  g.back() = hi;
  return g;
}

double pairwise_sum(std::span<const double> terms) {
  constexpr std::size_t kBlock = 64;
  if (terms.size() <= kBlock) {
    double s = 0.0;
    for (double t : terms) s += t;
    return s;
  }
  const std::size_t half = terms.size() / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = std::min(x.size(), y.size());
  if (n == 0) return {};
  if (n == 1) return {0.0, y[0]};
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double slope = sxx > 0.0 ? sxy / sxx : 0.0;
  return {slope, my - slope * mx};
}

double integrate_log(const ScalarFn& f, double a, double b) {
  using boost::math::quadrature::gauss;
  auto g = [&f](double u) {
    const double t = std::exp(u);
    return f(t) * t;
  };
  // One Gauss panel per unit of log-width keeps wide ranges at full accuracy.
  const double ua = std::log(a), ub = std::log(b);
  const int panels = std::max(1, static_cast<int>(std::ceil(ub - ua)));
  const double du = (ub - ua) / panels;
  double sum = 0.0;
  for (int k = 0; k < panels; ++k) sum += gauss<double, 10>::integrate(g, ua + k * du, ua + (k + 1) * du);
  return sum;
}

double integrate_to_zero(const ScalarFn& f, double s0) {
  double sum = 0.0;
  double prev = -1.0;
  double q = 0.0;
  int stalled = 0;
  int zero_run = 0;
  double hi = s0;
  double last = 0.0;
  for (int d = 0; d < 600; ++d) {
    const double lo = hi / 10.0;
    if (lo < 1e-300) break;
    const double piece = integrate_log(f, lo, hi);
    if (!std::isfinite(piece)) throw DivergentIntegral("integrand is not integrable near 0");
    sum += piece;
    last = piece;
    if (piece == 0.0) {
      if (++zero_run >= 2) return sum;
    } else {
      zero_run = 0;
    }
    if (prev > 0.0 && piece > 0.0) {
      q = piece / prev;
      stalled = (q >= 1.0 - 1e-3) ? stalled + 1 : 0;
      if (stalled >= 6) throw DivergentIntegral("decade contributions do not decay near 0");
      if (piece <= 1e-17 * sum && q < 1.0) return sum + piece * q / (1.0 - q);
    }
    prev = piece;
    hi = lo;
  }
  if (q > 0.0 && q < 1.0) sum += last * q / (1.0 - q);
  return sum;
}

std::vector<double> cumulative_integral(const ScalarFn& f, std::span<const double> grid) {
  std::vector<double> out;
  out.reserve(grid.size());
  if (grid.empty()) return out;
  double acc = integrate_to_zero(f, grid[0]);
  if (!std::isfinite(acc) || acc > kMaxTableValue) return out;
  out.push_back(acc);
  for (std::size_t k = 1; k < grid.size(); ++k) {
    acc += integrate_log(f, grid[k - 1], grid[k]);
    if (!std::isfinite(acc) || acc > kMaxTableValue) break;
    out.push_back(acc);
  }
  return out;
}

Maximum maximize_concave(const ScalarFn& phi, double r_start, double r_max) {
  const double u_min = std::log(1e-300);
  const double u_max = std::isfinite(r_max) ? std::log(r_max) : std::log(1e300);
  auto f = [&phi](double u) { return phi(std::exp(u)); };

  double u = std::clamp(std::log(std::max(r_start, 1e-300)), u_min, u_max);
  double step = 0.25;
  double lo = 0.0, hi = 0.0, mid = u;
  double fmid = f(u);

  const double up = std::min(u + step, u_max);
  const double fup = up > u ? f(up) : -kInf;
  if (fup > fmid) {
    lo = u;
    mid = up;
    fmid = fup;
    for (;;) {
      if (mid >= u_max) return {std::exp(u_max), fmid};
      const double next = std::min(mid + step, u_max);
      const double fn = f(next);
      if (!(fn > fmid)) {
        hi = next;
        break;
      }
      lo = mid;
      mid = next;
      fmid = fn;
      step *= 2.0;
    }
  } else {
    hi = up > u ? up : u;
    for (;;) {
      if (mid <= u_min) return {std::exp(u_min), fmid};
      const double prev = std::max(mid - step, u_min);
      const double fp = f(prev);
      if (!(fp > fmid)) {
        lo = prev;
        break;
      }
      hi = mid;
      mid = prev;
      fmid = fp;
      step *= 2.0;
    }
  }

  // Golden-section search on [lo, hi] in log r.
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && (b - a) > 1e-13 * std::max(1.0, std::abs(a)); ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  Maximum best{std::exp(mid), fmid};
  if (fc > best.value) best = {std::exp(c), fc};
  if (fd > best.value) best = {std::exp(d), fd};
  return best;
}

}  // namespace orliczkit
