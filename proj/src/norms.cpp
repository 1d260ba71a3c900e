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

#include "orliczkit/norms.hpp"

#include <algorithm>
#include <cstdint>

#include <boost/math/tools/roots.hpp>

namespace orliczkit {
namespace {

constexpr double kBracketSpan = 1e-12;
constexpr double kRelativeWidth = 1e-6;
// Keeps the root finder's interpolation steps finite when A saturates.
constexpr double kExcessCap = 1e12;

/// Distinct nonzero |f| values with multiplicities; the modular only depends on these.
struct Histogram {
  std::vector<double> values;
  std::vector<double> counts;
};

Histogram histogram(const SampledFunction& f) {
  std::vector<double> mags;
  const auto& bits = f.domain().bits();
  for (std::size_t q = 0; q < bits.size(); ++q) {
    if (bits[q] && f.values()[q] != 0.0) mags.push_back(std::abs(f.values()[q]));
  }
  std::sort(mags.begin(), mags.end());
  Histogram h;
  for (double m : mags) {
    if (!h.values.empty() && h.values.back() == m) {
      h.counts.back() += 1.0;
    } else {
      h.values.push_back(m);
      h.counts.push_back(1.0);
    }
  }
  return h;
}

double modular_of(const Histogram& h, const YoungFunction& a, double lambda, double cell) {
  std::vector<double> terms(h.values.size());
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const double v = a(h.values[k] / lambda);
    if (!std::isfinite(v)) return kInf;
    terms[k] = v * h.counts[k];
  }
  return pairwise_sum(terms) * cell;
}

}  // namespace

SampledFunction::SampledFunction(const RasterDomain& domain, std::vector<double> values, int max_order)
    : domain_(&domain), values_(std::move(values)), max_order_(max_order) {
  if (values_.size() != domain.bits().size()) throw Error("sampled function: size does not match the raster");
  if (max_order < 0) throw Error("sampled function: negative stencil order");
  for (std::size_t q = 0; q < values_.size(); ++q) {
    if (domain.bits()[q] && !std::isfinite(values_[q])) throw Error("sampled function: non-finite value");
  }
}

SampledFunction SampledFunction::scaled(double t) const {
  std::vector<double> v = values_;
  for (double& x : v) x *= t;
  return SampledFunction(*domain_, std::move(v), max_order_);
}

double SampledFunction::sup_abs() const {
  double m = 0.0;
  const auto& bits = domain_->bits();
  for (std::size_t q = 0; q < values_.size(); ++q) {
    if (bits[q]) m = std::max(m, std::abs(values_[q]));
  }
  return m;
}

double modular(const SampledFunction& f, const YoungFunction& a, double lambda) {
  if (!(lambda > 0.0)) throw Error("modular: lambda must be positive");
  return modular_of(histogram(f), a, lambda, f.domain().cell_volume());
}

double luxemburg_norm(const SampledFunction& f, const YoungFunction& a) {
  const Histogram hist = histogram(f);
  if (hist.values.empty()) return 0.0;
  const double cell = f.domain().cell_volume();
  const double top = hist.values.back();
  const InverseValue level = generalized_inverse(a, 1.0 / f.domain().measure(), InverseSide::right);
  // ||f|| <= top * ||chi_Omega||, which can hold with equality: pad the window.
  double hi = 2.0 * top * std::max(1.0, 1.0 / level.value);
  double lo = hi * kBracketSpan;
  if (modular_of(hist, a, hi, cell) > 1.0) {
    throw Error("luxemburg_norm: modular exceeds 1 at the top of the window " + std::to_string(hi));
  }
  if (modular_of(hist, a, lo, cell) <= 1.0) {
    throw Error("luxemburg_norm: modular stays below 1 down to " + std::to_string(lo));
  }
  // Bracketing root search on u = log lambda; modular - 1 is decreasing in u.
  const auto excess = [&](double u) {
    return std::min(modular_of(hist, a, std::exp(u), cell), kExcessCap) - 1.0;
  };
  const auto narrow = [](double x, double y) { return std::abs(y - x) <= kRelativeWidth; };
  std::uintmax_t iterations = 200;
  hi = std::exp(boost::math::tools::toms748_solve(excess, std::log(lo), std::log(hi), narrow, iterations).second);
  if (modular_of(hist, a, hi, cell) > 1.0) hi *= 1.0 + kRelativeWidth;
  return hi;
}

double chi_norm_closed(const YoungFunction& a, double measure) {
  if (!(measure > 0.0)) throw Error("chi_norm_closed: measure must be positive");
  return 1.0 / generalized_inverse(a, 1.0 / measure, InverseSide::right).value;
}

SampledFunction difference(const SampledFunction& f, int axis) {
  const RasterDomain& d = f.domain();
  if (axis < 0 || axis >= d.dim()) throw Error("difference: axis out of range");
  const auto& dims = d.dims();
  const std::size_t stride = axis == 0 ? 1 : (axis == 1 ? dims[0] : dims[0] * dims[1]);
  const double h = d.h();
  const auto& v = f.values();
  std::vector<double> out(v.size(), 0.0);
  for (std::size_t k = 0; k < dims[2]; ++k) {
    for (std::size_t j = 0; j < dims[1]; ++j) {
      for (std::size_t i = 0; i < dims[0]; ++i) {
        const std::size_t q = i + dims[0] * (j + dims[1] * k);
        if (!d.bits()[q]) continue;
        const std::array<std::size_t, 3> idx{i, j, k};
        const bool up = idx[axis] + 1 < dims[axis] && d.bits()[q + stride];
        const bool down = idx[axis] > 0 && d.bits()[q - stride];
        if (up && down) {
          out[q] = (v[q + stride] - v[q - stride]) / (2.0 * h);
        } else if (up) {
          out[q] = (v[q + stride] - v[q]) / h;
        } else if (down) {
          out[q] = (v[q] - v[q - stride]) / h;
        }
      }
    }
  }
  return SampledFunction(d, std::move(out), std::max(f.max_order() - 1, 0));
}

SampledFunction derivative(const SampledFunction& f, const MultiIndex& alpha) {
  const int order = alpha[0] + alpha[1] + alpha[2];
  if (order > f.max_order()) throw Error("derivative: order exceeds the declared stencil order");
  SampledFunction g = f;
  for (int axis = 0; axis < 3; ++axis) {
    for (int r = 0; r < alpha[axis]; ++r) g = difference(g, axis);
  }
  return g;
}

SampledFunction gradient_magnitude(const SampledFunction& f) {
  std::vector<double> sq(f.values().size(), 0.0);
  for (int axis = 0; axis < f.domain().dim(); ++axis) {
    const SampledFunction da = difference(f, axis);
    for (std::size_t q = 0; q < sq.size(); ++q) sq[q] += da.values()[q] * da.values()[q];
  }
  for (double& x : sq) x = std::sqrt(x);
  return SampledFunction(f.domain(), std::move(sq), std::max(f.max_order() - 1, 0));
}

std::vector<MultiIndex> multi_indices(int n, int m) {
  std::vector<MultiIndex> out;
  for (int total = 0; total <= m; ++total) {
    for (int a = total; a >= 0; --a) {
      if (n == 2) {
        out.push_back({a, total - a, 0});
        continue;
      }
      for (int b = total - a; b >= 0; --b) out.push_back({a, b, total - a - b});
    }
  }
  return out;
}

double sobolev_norm(const SampledFunction& f, const YoungFunction& a, int m, SobolevConvention convention) {
  if (m < 0) throw Error("sobolev_norm: negative order");
  if (m > f.max_order()) throw Error("sobolev_norm: order exceeds the declared stencil order");
  if (convention == SobolevConvention::gradient_magnitude) {
    if (m != 1) throw Error("sobolev_norm: the gradient-magnitude convention is first order");
    return luxemburg_norm(f, a) + luxemburg_norm(gradient_magnitude(f), a);
  }
  std::vector<double> parts;
  for (const MultiIndex& alpha : multi_indices(f.domain().dim(), m)) {
    parts.push_back(luxemburg_norm(derivative(f, alpha), a));
  }
  return pairwise_sum(parts);
}

}  // namespace orliczkit
