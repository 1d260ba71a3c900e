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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <functional>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace orliczkit {

/// Raised for rejected inputs and failed preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an improper integral does not converge at 0.
class DivergentIntegral : public Error {
 public:
  using Error::Error;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Largest value a sample table keeps before it is truncated.
inline constexpr double kMaxTableValue = 1e300;

/// Geometric grid parameters used for every sampled function.
struct GridSpec {
  double lo = 1e-8;
  double hi = 1e8;
  std::size_t count = 512;
};

std::vector<double> log_grid(double lo, double hi, std::size_t count);
inline std::vector<double> log_grid(const GridSpec& g) { return log_grid(g.lo, g.hi, g.count); }

/// Pairwise (tree) summation over fixed blocks: the result depends only on the
/// order of `terms`, never on how the caller partitioned the work.
double pairwise_sum(std::span<const double> terms);

/// Least-squares slope and intercept of y against x.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};
LineFit fit_line(std::span<const double> x, std::span<const double> y);

using ScalarFn = std::function<double(double)>;

/// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

/// fn(0), ..., fn(count - 1) over `workers` threads, index i on thread i mod workers.
/// The exception of the lowest failing index is rethrown after all threads join.
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

/// Integral of f over [a, b] (0 < a < b) by 10-point Gauss-Legendre in log s.
double integrate_log(const ScalarFn& f, double a, double b);

/// Integral of f over (0, s0] for an integrand that is power-like near 0.
/// Sums decade by decade toward 0 and closes with a geometric remainder.
/// Throws DivergentIntegral when the decade contributions stop shrinking.
double integrate_to_zero(const ScalarFn& f, double s0);

/// F(s_k) = integral of f over (0, s_k] for every abscissa of `grid`.
/// Stops early (returning a shorter vector) once a value is non-finite or
/// exceeds kMaxTableValue.
std::vector<double> cumulative_integral(const ScalarFn& f, std::span<const double> grid);

/// Maximizes a function that is concave in r over (0, r_max], starting the
/// search at `r_start`. Returns {argmax, max}. The argmax is clamped to
/// [1e-300, r_max].
struct Maximum {
  double arg = 0.0;
  double value = 0.0;
};
Maximum maximize_concave(const ScalarFn& phi, double r_start, double r_max);

}  // namespace orliczkit
