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

#include "orliczkit/sobolev_targets.hpp"

#include <algorithm>

namespace orliczkit {
namespace {

constexpr double kSlopeLimit = 0.05;

// Phi^{-1} is queried at levels s^{n'} for s up to the target grid end.
constexpr GridSpec kWideGrid{1e-8, 1e40, 1536};

/// Trapezoid of g over [a, b] with Richardson refinement.
double refined_trapezoid(const ScalarFn& g, double a, double b) {
  std::size_t n = 64;
  auto trap = [&](std::size_t k) {
    const double h = (b - a) / static_cast<double>(k);
    std::vector<double> terms(k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
      const double w = (i == 0 || i == k) ? 0.5 : 1.0;
      terms[i] = w * g(a + h * static_cast<double>(i));
    }
    return h * pairwise_sum(terms);
  };
  double coarse = trap(n);
  double best = coarse;
  for (int level = 0; level < 12; ++level) {
    n *= 2;
    const double fine = trap(n);
    const double rich = (4.0 * fine - coarse) / 3.0;
    if (!std::isfinite(rich)) return rich;
    if (std::abs(rich - best) <= 1e-10 * std::abs(rich) || rich == 0.0) return rich;
    best = rich;
    coarse = fine;
  }
  return best;
}

struct CappedTable {
  std::vector<double> s;
  std::vector<double> v;
};

CappedTable tabulate(std::span<const double> grid, const ScalarFn& f) {
  CappedTable t;
  for (double s : grid) {
    const double v = f(s);
    if (!std::isfinite(v) || v > kMaxTableValue) break;
    t.s.push_back(s);
    t.v.push_back(v);
  }
  return t;
}

/// Saturating tail for a cumulative integral whose integrand decays like
/// t^beta with beta < -1 beyond the last sample; nullopt otherwise.
std::optional<Tail> saturating_tail(const ScalarFn& integrand, double integrand_exponent, double s_last,
                                    double v_last) {
  if (!(integrand_exponent < -1.0 - 1e-9)) return std::nullopt;
  const double decay = -integrand_exponent - 1.0;
  const double rest = integrand(s_last) * s_last / decay;
  return Tail{PowerLaw{0.0, v_last + rest}, v_last + rest, decay};
}

void require_gate(const ImproperIntegral& part, const char* what) {
  if (part.verdict != GateVerdict::pass) {
    throw Error(std::string(what) + ": integrability gate does not pass (decay rate " +
                std::to_string(part.decay_rate) + ")");
  }
}

double right_slope(const YoungFunction& f, std::span<const double> s, std::size_t j, std::span<const double> v) {
  if (j + 1 < s.size()) return (v[j + 1] - v[j]) / (s[j + 1] - s[j]);
  if (f.finite_bound()) return kInf;
  return f.tail().exponent * v[j] / s[j];
}

}  // namespace

EmbeddingContext EmbeddingContext::make(int n, int m) {
  if (n < 2) throw Error("embedding context: n must be at least 2");
  if (m < 1 || m >= n) throw Error("embedding context: need 1 <= m < n");
  return {n, m};
}

const char* to_string(GateVerdict v) {
  switch (v) {
    case GateVerdict::pass: return "pass";
    case GateVerdict::fail: return "fail";
    case GateVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

ImproperIntegral improper_integral_near_zero(const ScalarFn& f, double upper) {
  ImproperIntegral out;
  const double u0 = std::log(upper);
  const ScalarFn g = [&f](double u) {
    const double t = std::exp(u);
    return f(t) * t;
  };
  double acc = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double piece = refined_trapezoid(g, u0 - 10.0 * (k + 1), u0 - 10.0 * k);
    if (!std::isfinite(piece)) {
      out.verdict = GateVerdict::fail;
      out.value = kInf;
      out.decay_rate = -kInf;
      return out;
    }
    acc += piece;
    out.partials.push_back(acc);
  }

  std::vector<double> us, logs;
  bool any_positive = false;
  for (int i = 0; i <= 20; ++i) {
    const double u = u0 - 40.0 + 0.5 * i;
    const double gu = g(u);
    if (gu > 0.0) {
      any_positive = true;
      us.push_back(u);
      logs.push_back(std::log(gu));
    }
  }
  if (!any_positive) {
    out.decay_rate = kInf;
    out.value = out.partials.back();
    out.verdict = GateVerdict::pass;
    return out;
  }
  const double kappa = us.size() >= 2 ? fit_line(us, logs).slope : 0.0;
  out.decay_rate = kappa;
  const double p2 = out.partials[1], p3 = out.partials[2], p4 = out.partials[3];
  if (kappa > 1e-3) {
    const double total40 = p4 + g(u0 - 40.0) / kappa;
    const double total30 = p3 + g(u0 - 30.0) / kappa;
    out.value = total40;
    out.refinement_change = total40 > 0.0 ? std::abs(total40 - total30) / total40 : 0.0;
    out.verdict = out.refinement_change < 1e-4 ? GateVerdict::pass : GateVerdict::inconclusive;
  } else if (kappa < -1e-3) {
    out.value = kInf;
    out.verdict = GateVerdict::fail;
  } else {
    out.value = p4;
    out.refinement_change = p4 > 0.0 ? (p4 - p3) / p4 : 0.0;
    out.verdict = (p4 - p3) >= 0.9 * (p3 - p2) ? GateVerdict::fail : GateVerdict::inconclusive;
  }
  return out;
}

GateReport integrability_gate(const YoungFunction& a, const EmbeddingContext& ctx) {
  GateReport rep;
  const double w = static_cast<double>(ctx.m) / (ctx.n - ctx.m);
  rep.primal = improper_integral_near_zero([&a, w](double s) {
    const double v = a(s);
    if (v <= 0.0) return kInf;
    return std::pow(s / v, w);
  });
  const YoungFunction conj = conjugate(a);
  const double q = ctx.order_exponent();
  double upper = 1.0;
  if (conj.finite_bound()) upper = std::min(upper, 0.5 * *conj.finite_bound());
  rep.dual = improper_integral_near_zero([&conj, q](double t) { return conj(t) / std::pow(t, 1.0 + q); }, upper);
  return rep;
}

MonotoneFunction phi_from_conjugate(const YoungFunction& conj, double q) {
  const ScalarFn f = [&conj, q](double t) { return conj(t) / std::pow(t, 1.0 + q); };
  const auto grid = conj.table().abscissae();
  auto values = cumulative_integral(f, grid);
  if (values.empty()) throw Error("Phi: integral overflows immediately");
  std::vector<double> s(grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(values.size()));
  TableParts parts{std::move(s), std::move(values), {}, {}, conj.zero_plateau(), {}};
  if (conj.finite_bound() && parts.abscissae.back() >= *conj.finite_bound()) {
    parts.finite_bound = conj.finite_bound();
  } else if (parts.abscissae.size() == grid.size()) {
    parts.tail = saturating_tail(f, conj.tail().exponent - 1.0 - q, parts.abscissae.back(), parts.values.back());
  }
  return MonotoneFunction(SampleTable(std::move(parts)));
}

MonotoneFunction phi_n(const YoungFunction& a, const EmbeddingContext& ctx) {
  require_gate(integrability_gate(a, ctx).dual, "Phi");
  return phi_from_conjugate(conjugate(a, ConjugateMethod::automatic, kWideGrid), ctx.order_exponent());
}

YoungFunction first_order_target(const YoungFunction& a, const EmbeddingContext& ctx) {
  if (ctx.m != 1) throw Error("first_order_target: needs m = 1");
  require_gate(integrability_gate(a, ctx).dual, "first_order_target");
  const YoungFunction conj = conjugate(a, ConjugateMethod::automatic, kWideGrid);
  const double np = ctx.n_prime();
  const MonotoneFunction phi = phi_from_conjugate(conj, np);

  const ScalarFn density = [&phi, np](double r) {
    const InverseValue inv = generalized_inverse(phi, std::pow(r, np), InverseSide::left);
    if (inv.saturated) return kInf;
    return std::pow(r, np - 1.0) * std::pow(inv.value, np);
  };
  const auto grid = log_grid(GridSpec{});
  auto values = cumulative_integral(density, grid);
  if (values.size() < 2) throw Error("first_order_target: target overflows on the grid");
  std::vector<double> s(grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(values.size()));
  std::optional<double> bound;
  if (std::isfinite(phi.supremum()) && !phi.finite_bound()) bound = std::pow(phi.supremum(), 1.0 / np);
  if (bound && s.back() >= *bound) {
    while (!s.empty() && s.back() >= *bound) {
      s.pop_back();
      values.pop_back();
    }
  }
  return YoungFunction::from_table(SampleTable(TableParts{std::move(s), std::move(values), {}, {}, {}, bound}));
}

GlueResult glue_target(const YoungFunction& a, const YoungFunction& a_n) {
  const auto s = a_n.table().abscissae();
  const std::size_t n = s.size();
  std::vector<double> av(n), bv(n);
  for (std::size_t k = 0; k < n; ++k) {
    av[k] = a(s[k]);
    bv[k] = a_n(s[k]);
  }
  constexpr double tol = 1e-12;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!std::isfinite(av[i])) break;
    const double left_a = i == 0 ? av[0] / s[0] : (av[i] - av[i - 1]) / (s[i] - s[i - 1]);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (bv[j] < av[i]) continue;
      const double chord = (bv[j] - av[i]) / (s[j] - s[i]);
      if (chord < left_a * (1.0 - tol)) continue;
      if (chord > right_slope(a_n, s, j, bv) * (1.0 + tol)) continue;
      std::vector<double> v(n);
      for (std::size_t k = 0; k < n; ++k) {
        if (k <= i) {
          v[k] = av[k];
        } else if (k < j) {
          v[k] = av[i] + chord * (s[k] - s[i]);
        } else {
          v[k] = bv[k];
        }
      }
      TableParts parts{{s.begin(), s.end()}, std::move(v), a.head(), a_n.table().tail(), a.zero_plateau(),
                       a_n.finite_bound()};
      return {YoungFunction::from_table(SampleTable(std::move(parts))), s[i], s[j]};
    }
  }
  throw Error("glue_target: no convex chord joins A to A_n on the sample grid");
}

HigherOrderTarget higher_order_target(const YoungFunction& a, const EmbeddingContext& ctx) {
  require_gate(integrability_gate(a, ctx).primal, "higher_order_target");
  const double w = static_cast<double>(ctx.m) / (ctx.n - ctx.m);
  const double outer = static_cast<double>(ctx.n - ctx.m) / ctx.n;
  const ScalarFn integrand = [&a, w](double t) { return std::pow(t / a(t), w); };

  const auto grid = log_grid(GridSpec{});
  auto inner = cumulative_integral(integrand, grid);
  if (inner.empty()) throw Error("higher_order_target: H overflows");
  std::vector<double> s(grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(inner.size()));
  std::vector<double> hv(inner.size());
  for (std::size_t k = 0; k < inner.size(); ++k) hv[k] = std::pow(inner[k], outer);

  const double beta = w * (1.0 - a.tail().exponent);
  std::optional<Tail> tail;
  if (auto sat = saturating_tail(integrand, beta, s.back(), inner.back())) {
    const double sup = std::pow(*sat->supremum, outer);
    tail = Tail{PowerLaw{0.0, sup}, sup, sat->decay};
  }
  HigherOrderTarget out{YoungFunction::linear(), MonotoneFunction(SampleTable(TableParts{s, hv, {}, tail, {}, {}})),
                        false};
  // pm = n leaves H growing like a power of log s: not saturated, but no power growth either.
  out.bounded_regime = tail.has_value() || a.tail().exponent * ctx.m >= ctx.n * (1.0 - 1e-9) ||
                       out.h.table().tail().law.exponent < 0.01;

  const MonotoneFunction& h = out.h;
  auto t = tabulate(grid, [&](double x) {
    const InverseValue inv = generalized_inverse(h, x, InverseSide::left);
    if (inv.saturated) return kInf;
    return a(inv.value);
  });
  if (t.s.size() < 2) throw Error("higher_order_target: target overflows on the grid");
  std::optional<double> bound;
  if (tail) bound = *tail->supremum;
  out.target = YoungFunction::from_table(SampleTable(TableParts{std::move(t.s), std::move(t.v), {}, {}, {}, bound}));
  return out;
}

ProofScales proof_scales(const YoungFunction& a, const EmbeddingContext& ctx) {
  const double q = ctx.order_exponent();
  const YoungFunction conj = conjugate(a, ConjugateMethod::automatic, kWideGrid);
  if (ctx.m == 1) {
    require_gate(integrability_gate(a, ctx).dual, "proof_scales");
  } else {
    require_gate(integrability_gate(a, ctx).primal, "proof_scales");
  }
  ProofScales out;
  out.phi = phi_from_conjugate(conj, q);
  const MonotoneFunction& phi = out.phi;
  const auto grid = log_grid(GridSpec{});

  auto c = tabulate(grid, [&](double s) {
    const InverseValue inv = generalized_inverse(phi, std::pow(s, q), InverseSide::left);
    if (inv.saturated) return kInf;
    return std::pow(s, q) * std::pow(inv.value, q);
  });
  if (c.s.size() < 2) throw Error("proof_scales: C overflows");
  out.c = MonotoneFunction(SampleTable(c.s, c.v));

  if (ctx.m == 1) {
    const auto ps = phi.table().abscissae();
    auto d = tabulate(ps, [&](double s) { return std::pow(s, q) * phi(s); });
    out.d = MonotoneFunction(SampleTable(d.s, d.v));

    // Identity C^{-1}(r) = r^{1/n'} / D^{-1}(r) on r where both tables are sampled.
    const double lo = std::max(c.v.front(), d.v.front());
    const double hi = std::min(c.v.back(), d.v.back());
    if (hi > lo && lo > 0.0) {
      for (double r : log_grid(lo, hi, 128)) {
        const InverseValue ci = generalized_inverse(out.c, r, InverseSide::right);
        const InverseValue di = generalized_inverse(*out.d, r, InverseSide::right);
        if (ci.saturated || di.saturated || ci.value <= 0.0 || di.value <= 0.0) continue;
        const double rhs = std::pow(r, 1.0 / q) / di.value;
        const double err = std::abs(ci.value - rhs) / ci.value;
        ++out.identity_points;
        if (err > out.identity_worst_error) {
          out.identity_worst_error = err;
          out.identity_worst_r = r;
        }
      }
    }

    const YoungFunction target = first_order_target(a, ctx);
    const auto ts = target.table().abscissae();
    const auto tv = target.table().values();
    for (std::size_t k = 0; k < ts.size(); ++k) {
      if (ts[k] > c.s.back() || tv[k] <= 0.0) continue;
      out.sandwich_lower = std::max(out.sandwich_lower, out.c(ts[k] / 2.0) / tv[k]);
      out.sandwich_upper = std::max(out.sandwich_upper, tv[k] / out.c(ts[k]));
    }
    return out;
  }

  // m > 1: E(s) = integral of C(t)/t, sandwich against A_{n/m}.
  const MonotoneFunction& cf = out.c;
  const ScalarFn ce = [&cf](double t) { return cf(t) / t; };
  const auto cs = cf.table().abscissae();
  auto ev = cumulative_integral(ce, cs);
  std::vector<double> es(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(ev.size()));
  out.e = MonotoneFunction(SampleTable(es, ev));

  const HigherOrderTarget hot = higher_order_target(a, ctx);
  std::vector<std::pair<double, double>> pts;
  const auto ts = hot.target.table().abscissae();
  const auto tv = hot.target.table().values();
  for (std::size_t k = 0; k < ts.size(); ++k) {
    if (ts[k] >= es.front() && ts[k] <= es.back() && tv[k] > 0.0) pts.emplace_back(ts[k], tv[k]);
  }
  const MonotoneFunction& e = *out.e;
  for (int k = 0; k >= -20 && !out.c1; --k) {
    const double c1 = std::ldexp(1.0, k);
    const bool ok = std::all_of(pts.begin(), pts.end(), [&](const auto& p) {
      return e(c1 * p.first) <= p.second * (1.0 + 1e-9);
    });
    if (ok) out.c1 = c1;
  }
  for (int k = 0; k <= 20 && !out.c2; ++k) {
    const double c2 = std::ldexp(1.0, k);
    const bool ok = std::all_of(pts.begin(), pts.end(), [&](const auto& p) {
      return p.second <= e(c2 * p.first) * (1.0 + 1e-9);
    });
    if (ok) out.c2 = c2;
  }
  return out;
}

RatioDecayReport ratio_decay_check(const YoungFunction& a, const YoungFunction& target,
                                   const EmbeddingContext& ctx, const RatioRange& range) {
  RatioDecayReport rep;
  rep.r0 = range.lo;
  const double decades = std::log10(range.hi / range.lo);
  const auto count = static_cast<std::size_t>(std::max(2.0, std::round(decades * range.per_decade) + 1));
  const double power = static_cast<double>(ctx.m) / ctx.n;
  double lo = kInf, hi = 0.0;
  std::vector<double> xs, ys;
  for (double r : log_grid(range.lo, range.hi, count)) {
    const InverseValue t = generalized_inverse(target, 2.0 * r, InverseSide::right);
    const InverseValue b = generalized_inverse(a, r, InverseSide::right);
    rep.saturated = rep.saturated || t.saturated || b.saturated;
    const double rho = t.value / b.value * std::pow(r, power);
    rep.table.emplace_back(r, rho);
    lo = std::min(lo, rho);
    hi = std::max(hi, rho);
    if (r >= range.hi / 10.0 * (1.0 - 1e-12)) {
      xs.push_back(std::log(r));
      ys.push_back(std::log(rho));
    }
  }
  rep.c0 = hi;
  rep.sup_over_inf = hi / lo;
  rep.slope = fit_line(xs, ys).slope;
  rep.pass = !rep.saturated && std::isfinite(rep.c0) && rep.slope <= kSlopeLimit;
  return rep;
}

}  // namespace orliczkit
