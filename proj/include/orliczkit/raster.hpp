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
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orliczkit {

using Point = std::array<double, 3>;

enum class DomainKind { cube, ball, lipschitz_graph, inward_cusp, fat_carpet };
const char* to_string(DomainKind k);
DomainKind parse_domain_kind(const std::string& name);

struct DomainSpec {
  DomainKind kind = DomainKind::cube;
  int n = 2;
  double h = 1.0 / 256;
  double side = 1.0;    ///< cube edge
  double radius = 0.5;  ///< ball radius
  double gamma = 2.0;   ///< cusp exponent
  int stages = 4;       ///< carpet stages
};

/// Occupancy raster on [0, nx h] x [0, ny h] (x [0, nz h]); a cell is occupied
/// when its center lies in the set. Row prefix sums make ball counts O(rows).
class RasterDomain {
 public:
  RasterDomain(int n, double h, std::array<std::size_t, 3> dims, std::vector<std::uint8_t> bits);

  int dim() const { return n_; }
  double h() const { return h_; }
  const std::array<std::size_t, 3>& dims() const { return dims_; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::size_t occupied() const { return count_; }
  double cell_volume() const;
  double measure() const { return static_cast<double>(count_) * cell_volume(); }

  bool occupied(std::size_t i, std::size_t j, std::size_t k = 0) const {
    return bits_[i + dims_[0] * (j + dims_[1] * k)] != 0;
  }
  Point center(std::size_t i, std::size_t j, std::size_t k = 0) const;
  bool contains(const Point& x) const;

  /// Number of occupied cells with center within distance r of x.
  std::size_t ball_count(const Point& x, double r) const;
  /// Squared distances from x to every occupied cell center within r.
  std::vector<double> ball_distances(const Point& x, double r) const;

  /// Occupied cells with an unoccupied or out-of-box face neighbour.
  std::vector<std::array<std::size_t, 3>> boundary_cells() const;

  const std::optional<DomainSpec>& spec() const { return spec_; }
  const std::vector<std::pair<std::string, double>>& metadata() const { return metadata_; }
  void set_origin(DomainSpec spec, std::vector<std::pair<std::string, double>> metadata);

 private:
  std::size_t row_count(std::size_t row, double lo, double hi) const;

  int n_;
  double h_;
  std::array<std::size_t, 3> dims_;
  std::vector<std::uint8_t> bits_;
  std::vector<std::uint32_t> prefix_;  ///< per row, nx + 1 entries
  std::size_t count_ = 0;
  std::optional<DomainSpec> spec_;
  std::vector<std::pair<std::string, double>> metadata_;
};

RasterDomain generate(const DomainSpec& spec);

/// |B(x, r) intersected with the domain|.
double ball_measure(const RasterDomain& d, const Point& x, double r);

/// c(x, r) = ball_measure / r^n for each radius.
std::vector<double> density_profile(const RasterDomain& d, const Point& x, const std::vector<double>& radii);

struct DensitySampling {
  enum class Mode { boundary, random } mode = Mode::random;
  std::size_t points = 64;
  std::uint64_t seed = 1;
  std::size_t radius_count = 16;
  double min_radius_cells = 8.0;
  double max_radius = 1.0;
  /// Regenerate at 2h (when the domain knows its spec) and report the change.
  bool compare_coarser = true;
  unsigned workers = 1;
};

struct DensityReport {
  std::vector<Point> points;
  std::vector<double> radii;
  std::vector<double> values;  ///< points x radii, row-major
  double inf = 0.0;
  Point argmin_point{};
  double argmin_radius = 0.0;
  /// Per-radius minimum over points.
  std::vector<double> radius_min;
  /// Log-log slope of radius_min against r over the smallest half of the radii.
  double small_radius_slope = 0.0;
  /// The infimum drops by more than 20% from 2h to h: the measure density
  /// condition fails at the resolution limit.
  bool degenerates = false;
  std::optional<double> coarse_inf;
  std::optional<double> resolution_change;
  std::string protocol;
};

std::vector<double> density_radii(const RasterDomain& d, const DensitySampling& s);
DensityReport density_constant(const RasterDomain& d, const DensitySampling& sampling);

/// Smallest radius with |B(x, r)| >= |B(x, R)| / 2 (exact over cell-center distances).
double halving_radius(const RasterDomain& d, const Point& x, double big_r);

inline constexpr std::size_t kMinHalvingCells = 16;

/// Uniform random points inside occupied cells.
std::vector<Point> random_points(const RasterDomain& d, std::size_t count, std::uint64_t seed);

double unit_ball_volume(int n);

}  // namespace orliczkit
