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
#include <vector>

#include "orliczkit/raster.hpp"
#include "orliczkit/young.hpp"

namespace orliczkit {

/// Values on the occupied cells of a raster (stored densely; unoccupied cells
/// hold 0 and are never read).
class SampledFunction {
 public:
  SampledFunction(const RasterDomain& domain, std::vector<double> values, int max_order = 1);

  template <class Fn>
  static SampledFunction from_field(const RasterDomain& domain, Fn&& f, int max_order = 1) {
    std::vector<double> v(domain.bits().size(), 0.0);
    const auto& d = domain.dims();
    for (std::size_t k = 0; k < d[2]; ++k) {
      for (std::size_t j = 0; j < d[1]; ++j) {
        for (std::size_t i = 0; i < d[0]; ++i) {
          if (domain.occupied(i, j, k)) v[i + d[0] * (j + d[1] * k)] = f(domain.center(i, j, k));
        }
      }
    }
    return SampledFunction(domain, std::move(v), max_order);
  }

  const RasterDomain& domain() const { return *domain_; }
  const std::vector<double>& values() const { return values_; }
  int max_order() const { return max_order_; }

  SampledFunction scaled(double t) const;
  /// max |f| over occupied cells.
  double sup_abs() const;

 private:
  const RasterDomain* domain_;
  std::vector<double> values_;
  int max_order_;
};

/// Sum over occupied cells of A(|f| / lambda) h^n; +inf once A saturates.
double modular(const SampledFunction& f, const YoungFunction& a, double lambda);

/// inf{lambda > 0 : modular <= 1}, bracketed in log lambda to relative width 1e-6.
/// Returns the upper end of the final bracket.
double luxemburg_norm(const SampledFunction& f, const YoungFunction& a);

/// 1 / A^{-1}(1 / measure), right inverse.
double chi_norm_closed(const YoungFunction& a, double measure);

using MultiIndex = std::array<int, 3>;

/// One difference along `axis`: central where both neighbours are occupied,
/// one-sided where only one is, zero for isolated cells.
SampledFunction difference(const SampledFunction& f, int axis);
/// Composed differences, alpha[0] times along x, then y, then z.
SampledFunction derivative(const SampledFunction& f, const MultiIndex& alpha);
/// Euclidean norm of the discrete gradient.
SampledFunction gradient_magnitude(const SampledFunction& f);

/// All multi-indices with |alpha| <= m in dimension n, ordered by |alpha|.
std::vector<MultiIndex> multi_indices(int n, int m);

enum class SobolevConvention {
  multi_index,         ///< sum over |alpha| <= m of ||D^alpha f||
  gradient_magnitude,  ///< m = 1 only: ||f|| + || |grad f| ||
};

double sobolev_norm(const SampledFunction& f, const YoungFunction& a, int m,
                    SobolevConvention convention = SobolevConvention::multi_index);

}  // namespace orliczkit
