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

#include "orliczkit/sample_table.hpp"

#include <algorithm>

namespace orliczkit {
namespace {

PowerLaw fit_window(std::span<const double> s, std::span<const double> v, double lo, double hi,
                    std::size_t pin) {
  std::vector<double> x, y;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] >= lo && s[k] <= hi && v[k] > 0.0) {
      x.push_back(std::log(s[k]));
      y.push_back(std::log(v[k]));
    }
  }
  if (v[pin] <= 0.0) return {1.0, 0.0};
  if (x.size() < 2) return {1.0, v[pin] / s[pin]};
  // Monotone tables never get a decreasing end law.
  const double e = std::max(fit_line(x, y).slope, 0.0);
  return {e, v[pin] / std::pow(s[pin], e)};
}

}  // namespace

PowerLaw fit_tail(std::span<const double> s, std::span<const double> v) {
  if (s.empty()) return {1.0, 0.0};
  const std::size_t last = s.size() - 1;
  return fit_window(s, v, s[last] / 10.0 * (1.0 - 1e-12), s[last], last);
}

PowerLaw fit_head(std::span<const double> s, std::span<const double> v) {
  std::size_t first = 0;
  while (first < v.size() && v[first] <= 0.0) ++first;
  if (first == v.size()) return {1.0, 0.0};
  return fit_window(s, v, s[first], s[first] * 10.0 * (1.0 + 1e-12), first);
}

SampleTable::SampleTable(TableParts parts)
    : s_(std::move(parts.abscissae)),
      v_(std::move(parts.values)),
      plateau_(parts.zero_plateau),
      bound_(parts.finite_bound) {
  if (s_.size() != v_.size()) throw Error("sample table: abscissae and values differ in length");
  if (s_.empty()) throw Error("sample table: no samples");
  for (std::size_t k = 0; k < s_.size(); ++k) {
    if (!(s_[k] > 0.0) || !std::isfinite(s_[k])) throw Error("sample table: abscissae must be positive and finite");
    if (k > 0 && !(s_[k] > s_[k - 1])) throw Error("sample table: abscissae must be strictly increasing");
    if (!(v_[k] >= 0.0) || !std::isfinite(v_[k])) throw Error("sample table: values must be finite and nonnegative");
  }
  head_ = parts.head ? *parts.head : fit_head(s_, v_);
  tail_ = parts.tail ? *parts.tail : Tail{fit_tail(s_, v_), std::nullopt, 0.0};
}

double SampleTable::operator()(double s) const {
  if (!(s > 0.0)) return 0.0;
  if (plateau_ && s <= *plateau_) return 0.0;
  if (bound_ && s > *bound_) return kInf;
  if (s < s_.front()) {
    // Between a plateau end below the grid and the first sample: linear.
    if (plateau_ && *plateau_ > 0.0) {
      return v_.front() * (s - *plateau_) / (s_.front() - *plateau_);
    }
    if (v_.front() > 0.0) return v_.front() * std::pow(s / s_.front(), head_.exponent);
    return head_(s);
  }
  if (s > s_.back()) {
    if (tail_.supremum) {
      const double sup = *tail_.supremum;
      return sup - (sup - v_.back()) * std::pow(s / s_.back(), -tail_.decay);
    }
    // Anchored at the last sample: a steep fitted law's coefficient may underflow.
    if (v_.back() > 0.0) return v_.back() * std::pow(s / s_.back(), tail_.law.exponent);
    return tail_.law(s);
  }
  const auto it = std::upper_bound(s_.begin(), s_.end(), s);
  if (it == s_.end()) return v_.back();
  const std::size_t k = static_cast<std::size_t>(it - s_.begin());
  const double s0 = s_[k - 1], s1 = s_[k];
  const double v0 = v_[k - 1], v1 = v_[k];
  if (v0 > 0.0 && v1 > 0.0) {
    const double w = std::log(s / s0) / std::log(s1 / s0);
    return std::exp(std::log(v0) + w * std::log(v1 / v0));
  }
  return v0 + (v1 - v0) * (s - s0) / (s1 - s0);
}

double SampleTable::supremum() const {
  if (bound_) return kInf;
  if (tail_.supremum) return *tail_.supremum;
  if (tail_.law.coeff > 0.0 && tail_.law.exponent > 0.0) return kInf;
  return v_.back();
}

TableParts SampleTable::parts() const { return TableParts{s_, v_, head_, tail_, plateau_, bound_}; }

}  // namespace orliczkit
