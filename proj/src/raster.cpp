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

#include "orliczkit/raster.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "orliczkit/numeric.hpp"

namespace orliczkit {
namespace {

std::size_t cells_along(double extent, double h) {
  const double c = std::round(extent / h);
  if (!(c >= 1.0) || c > 1e6) throw Error("raster: extent/h gives an unusable cell count");
  return static_cast<std::size_t>(c);
}

bool in_carpet(double x, double y, int stages) {
  for (int k = 1; k <= stages; ++k) {
    const double cell = std::pow(3.0, -(k - 1));
    const double half_hole = 0.5 * std::pow(2.0, -k);
    const double u = std::fmod(x, cell) / cell - 0.5;
    const double v = std::fmod(y, cell) / cell - 0.5;
    if (std::abs(u) < half_hole && std::abs(v) < half_hole) return false;
  }
  return true;
}

constexpr double kRefinementDrop = 0.8;

}  // namespace

const char* to_string(DomainKind k) {
  switch (k) {
    case DomainKind::cube: return "cube";
    case DomainKind::ball: return "ball";
    case DomainKind::lipschitz_graph: return "lipschitz-graph";
    case DomainKind::inward_cusp: return "inward-cusp";
    case DomainKind::fat_carpet: return "fat-carpet";
  }
  return "?";
}

DomainKind parse_domain_kind(const std::string& name) {
  for (DomainKind k : {DomainKind::cube, DomainKind::ball, DomainKind::lipschitz_graph, DomainKind::inward_cusp,
                       DomainKind::fat_carpet}) {
    if (name == to_string(k)) return k;
  }
  throw Error("unknown domain kind '" + name + "'");
}

double unit_ball_volume(int n) {
  return std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

RasterDomain::RasterDomain(int n, double h, std::array<std::size_t, 3> dims, std::vector<std::uint8_t> bits)
    : n_(n), h_(h), dims_(dims), bits_(std::move(bits)) {
  if (n != 2 && n != 3) throw Error("raster: dimension must be 2 or 3");
  if (!(h > 0.0) || !std::isfinite(h)) throw Error("raster: h must be positive");
  if (n == 2) dims_[2] = 1;
  const std::size_t nx = dims_[0], rows = dims_[1] * dims_[2];
  if (nx == 0 || rows == 0 || bits_.size() != nx * rows) throw Error("raster: occupancy size does not match dims");
  prefix_.assign(rows * (nx + 1), 0);
  for (std::size_t r = 0; r < rows; ++r) {
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < nx; ++i) {
      acc += bits_[r * nx + i] ? 1u : 0u;
      prefix_[r * (nx + 1) + i + 1] = acc;
    }
    count_ += acc;
  }
  if (count_ == 0) throw Error("raster: domain is empty");
}

double RasterDomain::cell_volume() const { return std::pow(h_, n_); }

Point RasterDomain::center(std::size_t i, std::size_t j, std::size_t k) const {
  return {(static_cast<double>(i) + 0.5) * h_, (static_cast<double>(j) + 0.5) * h_,
          n_ == 3 ? (static_cast<double>(k) + 0.5) * h_ : 0.0};
}

bool RasterDomain::contains(const Point& x) const {
  std::array<std::size_t, 3> idx{0, 0, 0};
  for (int a = 0; a < n_; ++a) {
    const double c = std::floor(x[a] / h_);
    if (c < 0.0 || c >= static_cast<double>(dims_[a])) return false;
    idx[a] = static_cast<std::size_t>(c);
  }
  return occupied(idx[0], idx[1], idx[2]);
}

std::size_t RasterDomain::row_count(std::size_t row, double lo, double hi) const {
  const double a = std::ceil(lo / h_ - 0.5);
  const double b = std::floor(hi / h_ - 0.5);
  const double last = static_cast<double>(dims_[0] - 1);
  if (b < 0.0 || a > last || a > b) return 0;
  const auto i0 = static_cast<std::size_t>(std::max(a, 0.0));
  const auto i1 = static_cast<std::size_t>(std::min(b, last));
  const std::uint32_t* p = &prefix_[row * (dims_[0] + 1)];
  return p[i1 + 1] - p[i0];
}

namespace {

/// Index range of cell centers within [c - r, c + r] along one axis.
bool axis_range(double c, double r, double h, std::size_t cells, std::size_t& lo, std::size_t& hi) {
  const double a = std::max(std::ceil((c - r) / h - 0.5), 0.0);
  const double b = std::min(std::floor((c + r) / h - 0.5), static_cast<double>(cells) - 1.0);
  if (a > b) return false;
  lo = static_cast<std::size_t>(a);
  hi = static_cast<std::size_t>(b);
  return true;
}

}  // namespace

std::size_t RasterDomain::ball_count(const Point& x, double r) const {
  if (!(r > 0.0)) return 0;
  std::size_t jlo, jhi, klo = 0, khi = 0;
  if (!axis_range(x[1], r, h_, dims_[1], jlo, jhi)) return 0;
  if (n_ == 3 && !axis_range(x[2], r, h_, dims_[2], klo, khi)) return 0;
  std::size_t total = 0;
  for (std::size_t k = klo; k <= khi; ++k) {
    const double dz = n_ == 3 ? (static_cast<double>(k) + 0.5) * h_ - x[2] : 0.0;
    for (std::size_t j = jlo; j <= jhi; ++j) {
      const double dy = (static_cast<double>(j) + 0.5) * h_ - x[1];
      const double rem = r * r - dy * dy - dz * dz;
      if (rem < 0.0) continue;
      const double w = std::sqrt(rem);
      total += row_count(j + dims_[1] * k, x[0] - w, x[0] + w);
    }
  }
  return total;
}

std::vector<double> RasterDomain::ball_distances(const Point& x, double r) const {
  std::vector<double> out;
  std::size_t jlo, jhi, klo = 0, khi = 0, ilo, ihi;
  if (!axis_range(x[1], r, h_, dims_[1], jlo, jhi)) return out;
  if (n_ == 3 && !axis_range(x[2], r, h_, dims_[2], klo, khi)) return out;
  for (std::size_t k = klo; k <= khi; ++k) {
    const double dz = n_ == 3 ? (static_cast<double>(k) + 0.5) * h_ - x[2] : 0.0;
    for (std::size_t j = jlo; j <= jhi; ++j) {
      const double dy = (static_cast<double>(j) + 0.5) * h_ - x[1];
      const double rem = r * r - dy * dy - dz * dz;
      if (rem < 0.0) continue;
      if (!axis_range(x[0], std::sqrt(rem), h_, dims_[0], ilo, ihi)) continue;
      for (std::size_t i = ilo; i <= ihi; ++i) {
        if (!occupied(i, j, k)) continue;
        const double dx = (static_cast<double>(i) + 0.5) * h_ - x[0];
        out.push_back(dx * dx + dy * dy + dz * dz);
      }
    }
  }
  return out;
}

std::vector<std::array<std::size_t, 3>> RasterDomain::boundary_cells() const {
  std::vector<std::array<std::size_t, 3>> out;
  const auto filled = [this](long i, long j, long k) {
    if (i < 0 || j < 0 || k < 0) return false;
    if (i >= static_cast<long>(dims_[0]) || j >= static_cast<long>(dims_[1]) || k >= static_cast<long>(dims_[2])) {
      return false;
    }
    return occupied(static_cast<std::size_t>(i), static_cast<std::size_t>(j), static_cast<std::size_t>(k));
  };
  for (std::size_t k = 0; k < dims_[2]; ++k) {
    for (std::size_t j = 0; j < dims_[1]; ++j) {
      for (std::size_t i = 0; i < dims_[0]; ++i) {
        if (!occupied(i, j, k)) continue;
        const long a = static_cast<long>(i), b = static_cast<long>(j), c = static_cast<long>(k);
        bool edge = !filled(a - 1, b, c) || !filled(a + 1, b, c) || !filled(a, b - 1, c) || !filled(a, b + 1, c);
        if (n_ == 3) edge = edge || !filled(a, b, c - 1) || !filled(a, b, c + 1);
        if (edge) out.push_back({i, j, k});
      }
    }
  }
  return out;
}

void RasterDomain::set_origin(DomainSpec spec, std::vector<std::pair<std::string, double>> metadata) {
  spec_ = spec;
  metadata_ = std::move(metadata);
}

RasterDomain generate(const DomainSpec& spec) {
  if (spec.n != 2 && spec.n != 3) throw Error("generate: dimension must be 2 or 3");
  if (!(spec.h > 0.0)) throw Error("generate: h must be positive");
  double extent = 1.0;
  std::vector<std::pair<std::string, double>> meta;
  switch (spec.kind) {
    case DomainKind::cube:
      if (!(spec.side > 0.0)) throw Error("generate: cube side must be positive");
      extent = spec.side;
      meta.emplace_back("side", spec.side);
      break;
    case DomainKind::ball:
      if (!(spec.radius > 0.0)) throw Error("generate: ball radius must be positive");
      extent = 2.0 * spec.radius;
      meta.emplace_back("radius", spec.radius);
      break;
    case DomainKind::lipschitz_graph:
      break;
    case DomainKind::inward_cusp:
      if (!(spec.gamma > 1.0)) throw Error("generate: cusp exponent must exceed 1");
      meta.emplace_back("gamma", spec.gamma);
      break;
    case DomainKind::fat_carpet: {
      if (spec.n != 2) throw Error("generate: fat-carpet is planar");
      if (spec.stages < 1 || spec.stages > 8) throw Error("generate: carpet stages must lie in 1..8");
      double retained = 1.0;
      for (int k = 1; k <= spec.stages; ++k) {
        retained *= 1.0 - std::pow(4.0, -k);
        meta.emplace_back("hole_side_ratio_stage_" + std::to_string(k), std::pow(2.0, -k));
      }
      meta.emplace_back("stages", spec.stages);
      meta.emplace_back("retained_lower_bound", retained);
      break;
    }
  }
  const std::size_t c = cells_along(extent, spec.h);
  const std::array<std::size_t, 3> dims{c, c, spec.n == 3 ? c : 1};
  std::vector<std::uint8_t> bits(dims[0] * dims[1] * dims[2], 0);
  const double h = spec.h;
  for (std::size_t k = 0; k < dims[2]; ++k) {
    for (std::size_t j = 0; j < dims[1]; ++j) {
      for (std::size_t i = 0; i < dims[0]; ++i) {
        const double x = (i + 0.5) * h, y = (j + 0.5) * h, z = (k + 0.5) * h;
        bool in = false;
        switch (spec.kind) {
          case DomainKind::cube: in = true; break;
          case DomainKind::ball: {
            const double r = spec.radius;
            double d2 = (x - r) * (x - r) + (y - r) * (y - r);
            if (spec.n == 3) d2 += (z - r) * (z - r);
            in = d2 < r * r;
            break;
          }
          case DomainKind::lipschitz_graph: {
            const double top = 0.6 + 0.2 * std::sin(2.0 * std::numbers::pi * x);
            in = (spec.n == 2 ? y : z) < top;
            break;
          }
          case DomainKind::inward_cusp: {
            const double lim = std::pow(x, spec.gamma);
            in = y < lim && (spec.n == 2 || z < lim);
            break;
          }
          case DomainKind::fat_carpet: in = in_carpet(x, y, spec.stages); break;
        }
        bits[i + dims[0] * (j + dims[1] * k)] = in ? 1 : 0;
      }
    }
  }
  RasterDomain d(spec.n, spec.h, dims, std::move(bits));
  d.set_origin(spec, std::move(meta));
  return d;
}

double ball_measure(const RasterDomain& d, const Point& x, double r) {
  return static_cast<double>(d.ball_count(x, r)) * d.cell_volume();
}

std::vector<double> density_profile(const RasterDomain& d, const Point& x, const std::vector<double>& radii) {
  if (!d.contains(x)) throw Error("density_profile: point is not in the domain");
  std::vector<double> out;
  out.reserve(radii.size());
  for (double r : radii) {
    if (!(r > 0.0)) throw Error("density_profile: radii must be positive");
    out.push_back(ball_measure(d, x, r) / std::pow(r, d.dim()));
  }
  return out;
}

std::vector<Point> random_points(const RasterDomain& d, std::size_t count, std::uint64_t seed) {
  std::vector<std::size_t> cells;
  cells.reserve(d.occupied());
  for (std::size_t q = 0; q < d.bits().size(); ++q) {
    if (d.bits()[q]) cells.push_back(q);
  }
  std::mt19937_64 rng(seed);
  const auto& dims = d.dims();
  std::vector<Point> pts;
  pts.reserve(count);
  for (std::size_t p = 0; p < count; ++p) {
    const auto pick = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(cells.size()));
    const std::size_t q = cells[std::min(pick, cells.size() - 1)];
    const std::size_t i = q % dims[0], j = (q / dims[0]) % dims[1], k = q / (dims[0] * dims[1]);
    Point c = d.center(i, j, k);
    for (int a = 0; a < d.dim(); ++a) c[a] += (uniform01(rng) - 0.5) * d.h();
    pts.push_back(c);
  }
  return pts;
}

std::vector<double> density_radii(const RasterDomain& d, const DensitySampling& s) {
  if (s.min_radius_cells < 8.0) throw Error("density sweep: minimum radius must be at least 8h");
  const double lo = s.min_radius_cells * d.h();
  if (!(s.max_radius > lo) || s.max_radius > 1.0) throw Error("density sweep: radius grid must lie in (8h, 1]");
  return log_grid(lo, s.max_radius, std::max<std::size_t>(s.radius_count, 2));
}

DensityReport density_constant(const RasterDomain& d, const DensitySampling& sampling) {
  DensityReport rep;
  rep.radii = density_radii(d, sampling);
  if (sampling.mode == DensitySampling::Mode::boundary) {
    for (const auto& c : d.boundary_cells()) rep.points.push_back(d.center(c[0], c[1], c[2]));
    rep.protocol = "all boundary cell centers";
  } else {
    rep.points = random_points(d, sampling.points, sampling.seed);
    rep.protocol = "uniform random points in occupied cells, seed " + std::to_string(sampling.seed);
  }
  const std::size_t nr = rep.radii.size();
  rep.values.assign(rep.points.size() * nr, 0.0);
  parallel_for(rep.points.size(), sampling.workers, [&](std::size_t p) {
    for (std::size_t k = 0; k < nr; ++k) {
      rep.values[p * nr + k] = ball_measure(d, rep.points[p], rep.radii[k]) / std::pow(rep.radii[k], d.dim());
    }
  });

  rep.inf = kInf;
  rep.radius_min.assign(nr, kInf);
  for (std::size_t p = 0; p < rep.points.size(); ++p) {
    for (std::size_t k = 0; k < nr; ++k) {
      const double v = rep.values[p * nr + k];
      rep.radius_min[k] = std::min(rep.radius_min[k], v);
      if (v < rep.inf) {
        rep.inf = v;
        rep.argmin_point = rep.points[p];
        rep.argmin_radius = rep.radii[k];
      }
    }
  }
  std::vector<double> xs, ys;
  for (std::size_t k = 0; k < std::max<std::size_t>(nr / 2, 2); ++k) {
    if (rep.radius_min[k] > 0.0) {
      xs.push_back(std::log(rep.radii[k]));
      ys.push_back(std::log(rep.radius_min[k]));
    }
  }
  if (xs.size() >= 2) rep.small_radius_slope = fit_line(xs, ys).slope;

  if (sampling.compare_coarser && d.spec()) {
    DomainSpec coarse = *d.spec();
    coarse.h *= 2.0;
    DensitySampling s2 = sampling;
    s2.compare_coarser = false;
    const double c_inf = density_constant(generate(coarse), s2).inf;
    rep.coarse_inf = c_inf;
    if (rep.inf > 0.0) rep.resolution_change = std::abs(c_inf - rep.inf) / rep.inf;
  }
  // A positive density constant survives refinement; a cusp loses a fixed
  // fraction of it at every halving of h.
  rep.degenerates = rep.inf <= 0.0 || (rep.coarse_inf && rep.inf < kRefinementDrop * *rep.coarse_inf);
  return rep;
}

double halving_radius(const RasterDomain& d, const Point& x, double big_r) {
  if (!(big_r > 0.0)) throw Error("halving_radius: radius must be positive");
  std::vector<double> d2 = d.ball_distances(x, big_r);
  if (d2.size() < kMinHalvingCells) {
    throw Error("halving_radius: resolution exhausted (" + std::to_string(d2.size()) + " cells in the ball)");
  }
  const std::size_t k = (d2.size() + 1) / 2 - 1;
  std::nth_element(d2.begin(), d2.begin() + static_cast<std::ptrdiff_t>(k), d2.end());
  const double kth = d2[k];
  // Cells tied with the k-th one enter the ball together. Stop just before or just
  // after the tied group, whichever lands closer to half.
  const double tie_lo = kth * (1.0 - 4e-12), tie_hi = kth * (1.0 + 4e-12);
  std::size_t below = 0, through = 0;
  double below_max = 0.0;
  for (double v : d2) {
    if (v < tie_lo) {
      ++below;
      below_max = std::max(below_max, v);
    }
    if (v <= tie_hi) ++through;
  }
  const double half = 0.5 * static_cast<double>(d2.size());
  const bool before = below > 0 && half - static_cast<double>(below) < static_cast<double>(through) - half;
  // Nudged so ball_count(x, result) includes the chosen cells despite rounding.
  return std::sqrt(before ? below_max : kth) * (1.0 + 1e-12);
}

}  // namespace orliczkit
