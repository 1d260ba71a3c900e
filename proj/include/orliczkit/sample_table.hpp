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
#include <vector>

#include "orliczkit/numeric.hpp"

namespace orliczkit {

/// coeff * s^exponent.
struct PowerLaw {
  double exponent = 1.0;
  double coeff = 0.0;

  double operator()(double s) const {
    if (coeff == 0.0) return 0.0;
    return coeff * std::pow(s, exponent);
  }
};

/// Behaviour beyond the last sample. With `supremum` set the table approaches
/// it as sup - (sup - v_last) * (s / s_last)^(-decay); otherwise `law` applies.
struct Tail {
  PowerLaw law;
  std::optional<double> supremum;
  double decay = 0.0;
};

/// Everything a sample table is made of. Head and tail are fitted when left
/// unset.
struct TableParts {
  std::vector<double> abscissae;
  std::vector<double> values;
  std::optional<PowerLaw> head;
  std::optional<Tail> tail;
  std::optional<double> zero_plateau;
  std::optional<double> finite_bound;
};

/// Monotone sample table with log-log interpolation, a power-law head below the
/// first sample and a fitted tail above the last one. Immutable.
class SampleTable {
 public:
  SampleTable() = default;
  explicit SampleTable(TableParts parts);
  SampleTable(std::vector<double> abscissae, std::vector<double> values)
      : SampleTable(TableParts{std::move(abscissae), std::move(values), {}, {}, {}, {}}) {}

  /// Value at s >= 0. Returns +inf beyond finite_bound.
  double operator()(double s) const;

  std::span<const double> abscissae() const { return s_; }
  std::span<const double> values() const { return v_; }
  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }

  const PowerLaw& head() const { return head_; }
  const Tail& tail() const { return tail_; }
  std::optional<double> zero_plateau() const { return plateau_; }
  std::optional<double> finite_bound() const { return bound_; }

  /// Supremum of the table's values when the tail saturates, else +inf.
  double supremum() const;

  TableParts parts() const;

 private:
  std::vector<double> s_;
  std::vector<double> v_;
  PowerLaw head_;
  Tail tail_;
  std::optional<double> plateau_;
  std::optional<double> bound_;
};

/// Least-squares power law through the positive samples of the last decade,
/// pinned to pass through the last sample.
PowerLaw fit_tail(std::span<const double> s, std::span<const double> v);

/// Same for the first decade, pinned to the first positive sample.
PowerLaw fit_head(std::span<const double> s, std::span<const double> v);

}  // namespace orliczkit
