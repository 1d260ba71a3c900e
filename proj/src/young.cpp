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

#include "orliczkit/young.hpp"

#include <algorithm>
#include <sstream>

namespace orliczkit {
namespace {

constexpr double kExponentTol = 1e-6;

std::vector<double> truncate_to_finite(std::span<const double> s, std::vector<double>& v) {
  std::size_t n = 0;
  while (n < v.size() && std::isfinite(v[n]) && v[n] <= kMaxTableValue) ++n;
  v.resize(n);
  return {s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n)};
}

SampleTable closed_form_table(const GridSpec& grid, const ScalarFn& f, std::optional<PowerLaw> head,
                              std::optional<PowerLaw> tail) {
  const auto g = log_grid(grid);
  std::vector<double> v(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) v[k] = f(g[k]);
  auto s = truncate_to_finite(g, v);
  if (s.empty()) throw Error("closed-form table overflows on the whole grid");
  TableParts parts{std::move(s), std::move(v), head, std::nullopt, std::nullopt, std::nullopt};
  if (tail) parts.tail = Tail{*tail, std::nullopt, 0.0};
  return SampleTable(std::move(parts));
}

void require_young(const SampleTable& t, const char* what) {
  const auto report = check_young_invariants(t);
  if (!report.young()) {
    throw Error(std::string(what) + ": not a Young function (" + report.first_violation + ")");
  }
}

/// Young function that is 0 on [0, c] and +inf beyond: conjugate of c*s.
YoungFunction indicator(double c, const GridSpec& grid) {
  std::vector<double> s;
  for (double x : log_grid(grid)) {
    if (x < c) s.push_back(x);
  }
  s.push_back(c);
  std::vector<double> v(s.size(), 0.0);
  return YoungFunction::from_table(SampleTable(TableParts{std::move(s), std::move(v), PowerLaw{1.0, 0.0},
                                                          Tail{PowerLaw{1.0, 0.0}, std::nullopt, 0.0}, c, c}));
}

YoungFunction numeric_conjugate(const YoungFunction& a, const GridSpec& grid) {
  const double slope0 = a.slope_at_zero();
  const double slope_inf = a.slope_at_infinity();
  if (slope0 > 0.0 && std::isfinite(slope_inf) && std::abs(slope_inf - slope0) <= 1e-9 * slope_inf) {
    return indicator(slope0, grid);
  }
  const std::optional<double> plateau = slope0 > 0.0 ? std::optional<double>(slope0) : std::nullopt;
  const std::optional<double> bound =
      std::isfinite(slope_inf) ? std::optional<double>(slope_inf) : std::nullopt;
  const double r_max = a.finite_bound().value_or(kInf);

  std::vector<double> s_out, v_out;
  if (plateau) {
    s_out.push_back(*plateau);
    v_out.push_back(0.0);
  }
  double r_prev = 1.0;
  auto sweep_point = [&](double s) {
    const ScalarFn phi = [&a, s](double r) { return s * r - a(r); };
    const Maximum m = maximize_concave(phi, r_prev, r_max);
    r_prev = m.arg;
    return std::max(0.0, m.value);
  };
  for (double s : log_grid(grid)) {
    if (plateau && s <= *plateau) continue;
    if (bound && s >= *bound) break;
    const double v = sweep_point(s);
    if (!std::isfinite(v) || v > kMaxTableValue) break;
    s_out.push_back(s);
    v_out.push_back(v);
  }
  if (bound) {
    s_out.push_back(*bound);
    v_out.push_back(sweep_point(*bound));
  }
  if (s_out.empty()) throw Error("conjugate: empty sweep");
  return YoungFunction::from_table(
      SampleTable(TableParts{std::move(s_out), std::move(v_out), {}, {}, plateau, bound}));
}

Dominance dominance(const YoungFunction& a, const YoungFunction& b, GrowthMode mode, double threshold) {
  Dominance out;
  std::vector<double> samples;
  for (double s : a.table().abscissae()) {
    if (mode == GrowthMode::near_infinity && s < threshold) continue;
    samples.push_back(s);
  }
  const bool a_bounded = a.finite_bound().has_value();
  const bool b_bounded = b.finite_bound().has_value();

  if (mode == GrowthMode::near_infinity) {
    if (a_bounded && !b_bounded) {
      out.verdict = GrowthVerdict::fails;
      out.witness = *a.finite_bound();
      out.exponent_gap = kInf;
      return out;
    }
    if (!a_bounded && !b_bounded) {
      out.exponent_gap = a.tail().exponent - b.tail().exponent;
      if (out.exponent_gap > 0.02) {
        out.verdict = GrowthVerdict::fails;
        out.witness = samples.empty() ? a.table().abscissae().back() : samples.back();
        return out;
      }
    }
  }

  for (int k = -20; k <= 20; ++k) {
    const double c = std::ldexp(1.0, k);
    bool ok = true;
    for (double s : samples) {
      const double lhs = a(s);
      const double rhs = b(c * s);
      if (!(lhs <= rhs * (1.0 + 1e-12))) {
        ok = false;
        out.witness = s;
        break;
      }
    }
    if (ok) {
      out.verdict = GrowthVerdict::dominates;
      out.constant = c;
      out.witness = 0.0;
      break;
    }
  }

  if (mode == GrowthMode::near_infinity && !a_bounded && !b_bounded &&
      std::abs(out.exponent_gap) <= 0.02) {
    // Equal tail exponents: an oscillating ratio over the last decade means the
    // finite grid cannot settle the question.
    const auto s = a.table().abscissae();
    std::vector<double> lr;
    for (double x : s) {
      if (x >= s.back() / 10.0) lr.push_back(std::log(a(x)) - std::log(b(x)));
    }
    int sign_changes = 0;
    for (std::size_t i = 2; i < lr.size(); ++i) {
      const double d0 = lr[i - 1] - lr[i - 2];
      const double d1 = lr[i] - lr[i - 1];
      if (d0 * d1 < 0.0 && std::abs(d0) > 1e-9 && std::abs(d1) > 1e-9) ++sign_changes;
    }
    if (sign_changes >= 3) out.verdict = GrowthVerdict::inconclusive;
  }
  return out;
}

}  // namespace

// ---- construction --------------------------------------------------------------------

YoungFunction YoungFunction::power(double p, double coeff, const GridSpec& grid) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw Error("power family needs p >= 1 (convexity fails below 1)");
  if (!(coeff > 0.0) || !std::isfinite(coeff)) throw Error("power family needs a positive coefficient");
  const PowerLaw law{p, coeff};
  auto table = closed_form_table(grid, law, law, law);
  return YoungFunction(p == 1.0 ? YoungFamily::linear : YoungFamily::power, {p, coeff}, std::move(table));
}

YoungFunction YoungFunction::power_log(double p, double lambda, const GridSpec& grid) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw Error("power-log family needs p >= 1");
  if (!std::isfinite(lambda)) throw Error("power-log family needs a finite lambda");
  const ScalarFn f = [p, lambda](double s) { return std::pow(s, p) * std::pow(std::log(std::exp(1.0) + s), lambda); };
  auto table = closed_form_table(grid, f, PowerLaw{p, 1.0}, std::nullopt);
  require_young(table, "power-log family");
  return YoungFunction(YoungFamily::power_log, {p, lambda}, std::move(table));
}

YoungFunction YoungFunction::linear(double coeff, const GridSpec& grid) {
  if (!(coeff > 0.0) || !std::isfinite(coeff)) throw Error("linear family needs a positive coefficient");
  const PowerLaw law{1.0, coeff};
  return YoungFunction(YoungFamily::linear, {1.0, coeff}, closed_form_table(grid, law, law, law));
}

YoungFunction YoungFunction::from_density(std::span<const double> r, std::span<const double> a) {
  if (r.size() != a.size() || r.size() < 2) throw Error("density: need at least two (r, a) samples");
  bool any_positive = false;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (!(r[k] > 0.0) || !std::isfinite(r[k])) throw Error("density: abscissae must be positive");
    if (k > 0 && !(r[k] > r[k - 1])) throw Error("density: abscissae must be strictly increasing");
    if (!(a[k] >= 0.0) || !std::isfinite(a[k])) throw Error("density: values must be finite and nonnegative");
    if (k > 0 && a[k] < a[k - 1]) {
      std::ostringstream msg;
      msg << "density: not monotone, a(" << r[k] << ") = " << a[k] << " < a(" << r[k - 1] << ") = " << a[k - 1];
      throw Error(msg.str());
    }
    any_positive = any_positive || a[k] > 0.0;
  }
  if (!any_positive) throw Error("density: identically zero");

  // Head: power law fitted to the first decade of the density.
  const PowerLaw dhead = fit_head(r, a);
  std::vector<double> values(r.size());
  double acc = a[0] > 0.0 ? r[0] * a[0] / (dhead.exponent + 1.0) : 0.0;
  values[0] = acc;
  for (std::size_t k = 1; k < r.size(); ++k) {
    const double r0 = r[k - 1], r1 = r[k], a0 = a[k - 1], a1 = a[k];
    double piece;
    if (a0 > 0.0 && a1 > 0.0 && a1 != a0) {
      const double beta = std::log(a1 / a0) / std::log(r1 / r0);
      piece = a0 * r0 / (beta + 1.0) * (std::pow(r1 / r0, beta + 1.0) - 1.0);
    } else {
      piece = 0.5 * (a0 + a1) * (r1 - r0);
    }
    acc += piece;
    values[k] = acc;
  }
  std::optional<double> plateau;
  std::size_t first = 0;
  while (first < a.size() && a[first] == 0.0) ++first;
  if (first > 0) plateau = r[first - 1];
  SampleTable table(TableParts{{r.begin(), r.end()}, std::move(values), {}, {}, plateau, {}});
  require_young(table, "density");
  return YoungFunction(YoungFamily::table, {}, std::move(table));
}

YoungFunction YoungFunction::from_table(SampleTable table) {
  require_young(table, "table");
  return YoungFunction(YoungFamily::table, {}, std::move(table));
}

double YoungFunction::operator()(double s) const {
  if (s < 0.0 || std::isnan(s)) throw Error("Young function evaluated at a negative argument");
  switch (family_) {
    case YoungFamily::power:
    case YoungFamily::linear:
      return params_[1] * std::pow(s, params_[0]);
    case YoungFamily::power_log:
      if (s == 0.0) return 0.0;
      return std::pow(s, params_[0]) * std::pow(std::log(std::exp(1.0) + s), params_[1]);
    case YoungFamily::table:
      break;
  }
  return table_(s);
}

PowerLaw YoungFunction::tail() const {
  if (family_ == YoungFamily::power || family_ == YoungFamily::linear) return {params_[0], params_[1]};
  return table_.tail().law;
}

PowerLaw YoungFunction::head() const {
  if (family_ == YoungFamily::power || family_ == YoungFamily::linear) return {params_[0], params_[1]};
  if (family_ == YoungFamily::power_log) return {params_[0], 1.0};
  return table_.head();
}

double YoungFunction::slope_at_zero() const {
  if (table_.zero_plateau()) return 0.0;
  const PowerLaw h = head();
  if (std::abs(h.exponent - 1.0) <= kExponentTol) return h.coeff;
  return 0.0;
}

double YoungFunction::slope_at_infinity() const {
  if (table_.finite_bound()) return kInf;
  if (family_ == YoungFamily::power_log) return (params_[0] == 1.0 && params_[1] == 0.0) ? 1.0 : kInf;
  if (table_.tail().supremum) return kInf;
  const PowerLaw t = tail();
  if (std::abs(t.exponent - 1.0) <= kExponentTol) return t.coeff;
  return kInf;
}

std::string YoungFunction::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (family_) {
    case YoungFamily::power:
      os << "power p=" << params_[0];
      if (params_[1] != 1.0) os << " coeff=" << params_[1];
      break;
    case YoungFamily::power_log:
      os << "powerlog p=" << params_[0] << " lambda=" << params_[1];
      break;
    case YoungFamily::linear:
      os << "linear coeff=" << params_[1];
      break;
    case YoungFamily::table:
      os << "table n=" << table_.size();
      break;
  }
  return os.str();
}

MonotoneFunction::MonotoneFunction(SampleTable table) : table_(std::move(table)) {
  const auto v = table_.values();
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k] < v[k - 1] * (1.0 - kConvexityTol)) throw Error("monotone function: values decrease");
  }
}

InvariantReport check_young_invariants(const SampleTable& t) {
  InvariantReport r;
  const auto s = t.abscissae();
  const auto v = t.values();
  auto note = [&r](const std::string& m) {
    if (r.first_violation.empty()) r.first_violation = m;
  };
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (v[k] < v[k - 1] * (1.0 - kConvexityTol)) {
      r.nondecreasing = false;
      note("decreasing at s=" + std::to_string(s[k]));
    }
    if (v[k] / s[k] < (v[k - 1] / s[k - 1]) * (1.0 - kConvexityTol)) {
      r.ratio_nondecreasing = false;
      note("A(s)/s decreases at s=" + std::to_string(s[k]));
    }
  }
  for (std::size_t k = 2; k < s.size(); ++k) {
    const double m0 = (v[k - 1] - v[k - 2]) / (s[k - 1] - s[k - 2]);
    const double m1 = (v[k] - v[k - 1]) / (s[k] - s[k - 1]);
    if (m1 < m0 - kConvexityTol * std::max(std::abs(m0), std::abs(m1))) {
      r.convex = false;
      note("second divided difference negative at s=" + std::to_string(s[k - 1]));
    }
  }
  if (!t.finite_bound()) {
    if (t.tail().supremum || t.tail().law.exponent < 1.0 - kExponentTol) {
      r.tail_superlinear = false;
      note("tail exponent below 1");
    }
  }
  return r;
}

// ---- inverses ----------------------------------------------------------------------

namespace {

InverseValue invert(const ScalarFn& f, std::optional<double> bound, std::optional<double> plateau, double r,
                    InverseSide side) {
  if (std::isnan(r) || r < 0.0) throw Error("generalized inverse: level must be nonnegative");
  const bool right = side == InverseSide::right;
  if (!right && r == 0.0) return {0.0, false};
  if (right && r == 0.0) return {plateau.value_or(0.0), false};
  auto pred = [&](double s) { return right ? f(s) <= r : f(s) >= r; };
  // pred is true on the low side for `right`, on the high side for `left`.
  const bool low_value = right;

  double hi;
  if (bound) {
    const double fb = f(*bound);
    if (right && fb <= r) return {*bound, false};
    if (!right && fb < r) return {*bound, false};
    hi = *bound;
  } else {
    hi = 1.0;
    while (pred(hi) == low_value) {
      hi *= 16.0;
      if (hi > kInverseCeiling) return {kInverseCeiling, true};
    }
  }
  double lo = hi / 16.0;
  while (pred(lo) != low_value) {
    lo /= 16.0;
    if (lo < 1e-300) return {0.0, false};
  }
  for (int it = 0; it < 400 && hi / lo - 1.0 > 4e-16; ++it) {
    const double mid = std::sqrt(lo) * std::sqrt(hi);
    if (mid <= lo || mid >= hi) break;
    if (pred(mid) == low_value) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {right ? lo : hi, false};
}

}  // namespace

InverseValue generalized_inverse(const ScalarFn& f, std::optional<double> bound, double r, InverseSide side) {
  return invert(f, bound, std::nullopt, r, side);
}

InverseValue generalized_inverse(const YoungFunction& a, double r, InverseSide side) {
  if (std::isinf(r) && r > 0) {
    if (a.finite_bound()) return {*a.finite_bound(), false};
    return {kInverseCeiling, true};
  }
  return invert([&a](double s) { return a(s); }, a.finite_bound(), a.zero_plateau(), r, side);
}

InverseValue generalized_inverse(const MonotoneFunction& f, double r, InverseSide side) {
  if (std::isinf(r) && r > 0) {
    if (f.finite_bound()) return {*f.finite_bound(), false};
    return {kInverseCeiling, true};
  }
  if (r >= f.supremum()) {
    if (side == InverseSide::left && r > f.supremum()) return {kInverseCeiling, true};
    if (side == InverseSide::right) return {kInverseCeiling, true};
  }
  return invert([&f](double s) { return f(s); }, f.finite_bound(), f.table().zero_plateau(), r, side);
}

// ---- calculus ----------------------------------------------------------------------

YoungFunction conjugate(const YoungFunction& a, ConjugateMethod method, const GridSpec& grid) {
  if (method == ConjugateMethod::automatic) {
    if (a.family() == YoungFamily::linear) return indicator(a.params()[1], grid);
    if (a.family() == YoungFamily::power) {
      const double p = a.params()[0], c = a.params()[1];
      const double q = p / (p - 1.0);
      const double k = (1.0 - 1.0 / p) * std::pow(c * p, -1.0 / (p - 1.0));
      return YoungFunction::power(q, k, grid);
    }
  }
  return numeric_conjugate(a, grid);
}

YoungFunction integral_mean(const YoungFunction& a) {
  if (a.family() == YoungFamily::power) return YoungFunction::power(a.params()[0], a.params()[1] / a.params()[0]);
  if (a.family() == YoungFamily::linear) return YoungFunction::linear(a.params()[1]);
  const auto grid = a.table().abscissae();
  const ScalarFn f = [&a](double r) { return a(r) / r; };
  auto values = cumulative_integral(f, grid);
  std::vector<double> s(grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(values.size()));
  if (s.empty()) throw Error("integral_mean: empty table");
  auto bound = a.finite_bound();
  if (bound && s.back() < *bound) bound.reset();
  return YoungFunction::from_table(
      SampleTable(TableParts{std::move(s), std::move(values), {}, {}, a.zero_plateau(), bound}));
}

GrowthComparison compare_growth(const YoungFunction& a, const YoungFunction& b, GrowthMode mode, double threshold) {
  return {dominance(a, b, mode, threshold), dominance(b, a, mode, threshold)};
}

YoungFunction linearize_near_zero(const YoungFunction& a, double s_star) {
  if (!(s_star > 0.0)) throw Error("linearize_near_zero: s_star must be positive");
  constexpr double kStep = 1e-5;
  const double slope = (a(s_star * (1.0 + kStep)) - a(s_star * (1.0 - kStep))) / (2.0 * s_star * kStep);
  const double shift = slope * s_star - a(s_star);
  std::vector<double> s, v;
  bool placed = false;
  for (double x : a.table().abscissae()) {
    if (!placed && x >= s_star) {
      if (x > s_star) {
        s.push_back(s_star);
        v.push_back(slope * s_star);
      }
      placed = true;
    }
    s.push_back(x);
    v.push_back(x <= s_star ? slope * x : a(x) + shift);
  }
  if (!placed) throw Error("linearize_near_zero: s_star beyond the table");
  return YoungFunction::from_table(
      SampleTable(TableParts{std::move(s), std::move(v), PowerLaw{1.0, slope}, {}, std::nullopt, a.finite_bound()}));
}

const char* to_string(YoungFamily f) {
  switch (f) {
    case YoungFamily::power: return "power";
    case YoungFamily::power_log: return "powerlog";
    case YoungFamily::linear: return "linear";
    case YoungFamily::table: return "table";
  }
  return "?";
}

const char* to_string(GrowthVerdict v) {
  switch (v) {
    case GrowthVerdict::dominates: return "dominates";
    case GrowthVerdict::fails: return "fails";
    case GrowthVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace orliczkit
