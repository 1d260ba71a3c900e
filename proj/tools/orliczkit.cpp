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

// orliczkit: command-line front end for Young functions, Sobolev targets,
// raster domains and the necessity harness.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "orliczkit/io.hpp"
#include "orliczkit/report.hpp"

namespace ok = orliczkit;

namespace {

constexpr int kExitFail = 2;
constexpr int kExitUsage = 1;

struct Options {
  std::string young = "power:2";
  int n = 2;
  int m = 1;
  double h = 1.0 / 256;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  std::string out;
  std::string format;

  // domains
  std::string gen;
  std::string domain;
  double side = 1.0;
  double radius = 0.5;
  double gamma = 2.0;
  int stages = 4;

  // command specific
  double r = 1.0;
  std::string side_name = "right";
  double alpha = 0.5;
  std::string variant = "iii";
  std::string field = "chi";
  std::vector<double> center;
  double big_r = 0.25;
  std::vector<double> radii{0.1, 0.2, 0.5};
  std::size_t points = 64;
  std::size_t centers = 10;
  std::string mode = "boundary";
  double linearize_at = 1.0;
  bool coarse = true;
};

unsigned worker_count(const Options& o) {
  if (o.workers > 0) return o.workers;
  if (const char* env = std::getenv("ORLICZKIT_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

/// Writes to --out, or stdout when no path was given.
void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(o.out);
  if (!os) throw ok::Error("cannot write " + o.out);
  os << text;
}

std::string json_text(const ok::Json& j) {
  std::ostringstream os;
  ok::write_json(os, j);
  return os.str();
}

std::string yf1_text(const ok::YoungFunction& a) {
  std::ostringstream os;
  ok::write_yf1(os, a);
  return os.str();
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  if (o.format.empty()) return;
  for (const char* f : allowed) {
    if (o.format == f) return;
  }
  throw ok::Error("format '" + o.format + "' is not available for this command");
}

ok::Json header(const char* command, const Options& o) {
  return ok::Json{{"command", command}, {"seed", o.seed}};
}

ok::EmbeddingContext context(const Options& o) { return ok::EmbeddingContext::make(o.n, o.m); }

ok::RasterDomain load_domain(const Options& o) {
  if (!o.domain.empty() && !o.gen.empty()) throw ok::Error("give either --domain or --gen, not both");
  if (!o.domain.empty()) return ok::load_ord1(o.domain);
  if (o.gen.empty()) throw ok::Error("a domain is required: --domain <file.ord1> or --gen <kind>");
  ok::DomainSpec spec;
  spec.kind = ok::parse_domain_kind(o.gen);
  spec.n = o.n;
  spec.h = o.h;
  spec.side = o.side;
  spec.radius = o.radius;
  spec.gamma = o.gamma;
  spec.stages = o.stages;
  return ok::generate(spec);
}

ok::Point point_from(const std::vector<double>& v, int n) {
  if (v.size() != static_cast<std::size_t>(n)) throw ok::Error("--x needs " + std::to_string(n) + " coordinates");
  ok::Point p{};
  for (int k = 0; k < n; ++k) p[k] = v[k];
  return p;
}

ok::Json point_json(const ok::Point& p, int n) {
  ok::Json out = ok::Json::array();
  for (int k = 0; k < n; ++k) out.push_back(p[k]);
  return out;
}

struct TargetBuild {
  ok::YoungFunction a;
  ok::YoungFunction target;
  bool linearized = false;
};

/// Glued first-order target (m = 1) or higher-order target, changing A near 0
/// when the integrability gate fails.
TargetBuild ratio_target(const ok::YoungFunction& a, const ok::EmbeddingContext& ctx, double s_star) {
  TargetBuild b{a, a, false};
  if (!ok::integrability_gate(a, ctx).pass()) {
    b.a = ok::linearize_near_zero(a, s_star);
    b.linearized = true;
  }
  if (ctx.m == 1) {
    b.target = ok::glue_target(b.a, ok::first_order_target(b.a, ctx)).target;
  } else {
    b.target = ok::higher_order_target(b.a, ctx).target;
  }
  return b;
}

ok::SampledFunction probe_field(const ok::RasterDomain& d, const std::string& name, int order) {
  if (name == "chi") return ok::SampledFunction::from_field(d, [](const ok::Point&) { return 1.0; }, order);
  if (name == "x1") return ok::SampledFunction::from_field(d, [](const ok::Point& p) { return p[0]; }, order);
  if (name == "x1x2") return ok::SampledFunction::from_field(d, [](const ok::Point& p) { return p[0] * p[1]; }, order);
  if (name == "r2") {
    return ok::SampledFunction::from_field(
        d, [](const ok::Point& p) { return p[0] * p[0] + p[1] * p[1] + p[2] * p[2]; }, order);
  }
  throw ok::Error("unknown field '" + name + "' (chi, x1, x1x2, r2)");
}

// ---- commands -------------------------------------------------------------

int young_conjugate(const Options& o) {
  require_format(o, {"yf1", "json"});
  const ok::YoungFunction conj = ok::conjugate(ok::parse_young(o.young));
  if (o.format == "json") {
    ok::Json j = header("young conjugate", o);
    j["conjugate"] = ok::to_json(conj);
    emit(o, json_text(j));
  } else {
    emit(o, yf1_text(conj));
  }
  return 0;
}

int young_invert(const Options& o) {
  require_format(o, {"json"});
  if (o.side_name != "left" && o.side_name != "right") throw ok::Error("--side is left or right");
  const auto side = o.side_name == "left" ? ok::InverseSide::left : ok::InverseSide::right;
  const ok::YoungFunction a = ok::parse_young(o.young);
  const ok::InverseValue v = ok::generalized_inverse(a, o.r, side);
  ok::Json j = header("young invert", o);
  j["young"] = ok::to_json(a);
  j["r"] = o.r;
  j["side"] = o.side_name;
  j["value"] = v.value;
  j["saturated"] = v.saturated;
  emit(o, json_text(j));
  return 0;
}

int young_show(const Options& o) {
  require_format(o, {"json", "yf1"});
  const ok::YoungFunction a = ok::parse_young(o.young);
  if (o.format == "yf1") {
    emit(o, yf1_text(a));
    return 0;
  }
  const ok::InvariantReport inv = ok::check_young_invariants(a.table());
  ok::Json j = header("young show", o);
  j["young"] = ok::to_json(a);
  j["head_exponent"] = a.head().exponent;
  j["invariants"] = ok::Json{{"nondecreasing", inv.nondecreasing},
                             {"convex", inv.convex},
                             {"ratio_nondecreasing", inv.ratio_nondecreasing},
                             {"tail_superlinear", inv.tail_superlinear},
                             {"first_violation", inv.first_violation}};
  emit(o, json_text(j));
  return inv.young() ? 0 : kExitFail;
}

int target_first(const Options& o) {
  require_format(o, {"yf1", "json"});
  const ok::EmbeddingContext ctx = ok::EmbeddingContext::make(o.n, 1);
  const ok::YoungFunction t = ok::first_order_target(ok::parse_young(o.young), ctx);
  if (o.format == "json") {
    ok::Json j = header("target first", o);
    j["ctx"] = ok::Json{{"n", ctx.n}, {"m", ctx.m}};
    j["target"] = ok::to_json(t);
    emit(o, json_text(j));
  } else {
    emit(o, yf1_text(t));
  }
  return 0;
}

int target_higher(const Options& o) {
  require_format(o, {"yf1", "json"});
  const ok::EmbeddingContext ctx = context(o);
  const ok::HigherOrderTarget t = ok::higher_order_target(ok::parse_young(o.young), ctx);
  if (o.format == "json") {
    ok::Json j = header("target higher", o);
    j["ctx"] = ok::Json{{"n", ctx.n}, {"m", ctx.m}};
    j["target"] = ok::to_json(t.target);
    j["bounded_regime"] = t.bounded_regime;
    emit(o, json_text(j));
  } else {
    emit(o, yf1_text(t.target));
  }
  return 0;
}

int target_glue(const Options& o) {
  require_format(o, {"yf1", "json"});
  const ok::EmbeddingContext ctx = ok::EmbeddingContext::make(o.n, 1);
  const ok::YoungFunction a = ok::parse_young(o.young);
  const ok::GlueResult g = ok::glue_target(a, ok::first_order_target(a, ctx));
  if (o.format == "json") {
    ok::Json j = header("target glue", o);
    j["ctx"] = ok::Json{{"n", ctx.n}, {"m", ctx.m}};
    j["s1"] = g.s1;
    j["s2"] = g.s2;
    j["target"] = ok::to_json(g.target);
    emit(o, json_text(j));
  } else {
    emit(o, yf1_text(g.target));
  }
  return 0;
}

int boyd_index(const Options& o) {
  require_format(o, {"json"});
  const ok::YoungFunction a = ok::parse_young(o.young);
  ok::Json j = header("boyd index", o);
  j["young"] = ok::to_json(a);
  const ok::EmbeddingContext ctx = context(o);
  j["ctx"] = ok::Json{{"n", ctx.n}, {"m", ctx.m}};
  j["estimate"] = ok::to_json(ok::boyd_upper_index(a), {static_cast<double>(ctx.n) / ctx.m});
  emit(o, json_text(j));
  return 0;
}

int boyd_check(const Options& o) {
  require_format(o, {"json"});
  if (o.variant != "ii" && o.variant != "iii") throw ok::Error("--variant is ii or iii");
  if (!(o.alpha > 0.0 && o.alpha < 1.0)) throw ok::Error("--alpha must lie in (0, 1)");
  const ok::YoungFunction a = ok::parse_young(o.young);
  const auto variant = o.variant == "ii" ? ok::GrowthVariant::ii : ok::GrowthVariant::iii;
  const ok::GrowthConditionResult g = ok::growth_condition(a, o.alpha, variant);
  const ok::BoydEstimate est = ok::boyd_upper_index(a);
  ok::Json j = header("boyd check", o);
  j["young"] = ok::to_json(a);
  j["alpha"] = o.alpha;
  j["variant"] = o.variant;
  j["condition"] = ok::to_json(g);
  j["index"] = est.index;
  j["index_verdict"] = ok::to_string(ok::index_below(est, 1.0 / o.alpha));
  emit(o, json_text(j));
  return g.pass ? 0 : kExitFail;
}

int norm_lux(const Options& o) {
  require_format(o, {"json"});
  const ok::RasterDomain d = load_domain(o);
  const ok::YoungFunction a = ok::parse_young(o.young);
  const ok::SampledFunction f = probe_field(d, o.field, 1);
  ok::Json j = header("norm lux", o);
  j["young"] = ok::to_json(a);
  j["field"] = o.field;
  j["measure"] = d.measure();
  j["norm"] = ok::luxemburg_norm(f, a);
  if (o.field == "chi") j["closed_form"] = ok::chi_norm_closed(a, d.measure());
  emit(o, json_text(j));
  return 0;
}

int norm_sobolev(const Options& o) {
  require_format(o, {"json"});
  const ok::RasterDomain d = load_domain(o);
  const ok::YoungFunction a = ok::parse_young(o.young);
  const ok::SampledFunction f = probe_field(d, o.field, o.m);
  ok::Json j = header("norm sobolev", o);
  j["young"] = ok::to_json(a);
  j["field"] = o.field;
  j["m"] = o.m;
  j["norm"] = ok::sobolev_norm(f, a, o.m);
  emit(o, json_text(j));
  return 0;
}

int domain_gen(const Options& o) {
  require_format(o, {"ord1", "json"});
  if (o.gen.empty()) throw ok::Error("domain gen needs --gen <kind>");
  const ok::RasterDomain d = load_domain(o);
  if (o.format == "json") {
    ok::Json j = header("domain gen", o);
    j["kind"] = o.gen;
    j["n"] = d.dim();
    j["h"] = d.h();
    j["dims"] = d.dims();
    j["occupied"] = d.occupied();
    j["measure"] = d.measure();
    ok::Json meta = ok::Json::object();
    for (const auto& [k, v] : d.metadata()) meta[k] = v;
    j["metadata"] = meta;
    emit(o, json_text(j));
    return 0;
  }
  std::ostringstream os;
  ok::write_ord1(os, d);
  emit(o, os.str());
  return 0;
}

int domain_density(const Options& o) {
  require_format(o, {"json"});
  const ok::RasterDomain d = load_domain(o);
  ok::DensitySampling s;
  if (o.mode != "random" && o.mode != "boundary") throw ok::Error("--mode is random or boundary");
  s.mode = o.mode == "boundary" ? ok::DensitySampling::Mode::boundary : ok::DensitySampling::Mode::random;
  s.points = o.points;
  s.seed = o.seed;
  s.compare_coarser = o.coarse;
  s.workers = worker_count(o);
  const ok::DensityReport rep = ok::density_constant(d, s);
  ok::Json j = header("domain density", o);
  j["n"] = d.dim();
  j["h"] = d.h();
  j["measure"] = d.measure();
  j["report"] = ok::to_json(rep, d.dim());
  emit(o, json_text(j));
  return rep.degenerates ? kExitFail : 0;
}

int domain_halve(const Options& o) {
  require_format(o, {"json"});
  const ok::RasterDomain d = load_domain(o);
  const ok::Point x = point_from(o.center, d.dim());
  const double r = ok::halving_radius(d, x, o.big_r);
  const double outer = ok::ball_measure(d, x, o.big_r);
  const double inner = ok::ball_measure(d, x, r);
  const double tol = 2.0 * d.cell_volume() / outer;
  ok::Json j = header("domain halve", o);
  j["x"] = point_json(x, d.dim());
  j["R"] = o.big_r;
  j["halving_radius"] = r;
  j["measure_outer"] = outer;
  j["measure_inner"] = inner;
  j["ratio"] = inner / outer;
  j["tolerance"] = tol;
  j["within_tolerance"] = std::abs(inner / outer - 0.5) <= tol;
  emit(o, json_text(j));
  return 0;
}

int verify_ratio_lemma(const Options& o) {
  require_format(o, {"json"});
  const ok::EmbeddingContext ctx = context(o);
  const TargetBuild b = ratio_target(ok::parse_young(o.young), ctx, o.linearize_at);
  const ok::RatioDecayReport rep = ok::ratio_decay_check(b.a, b.target, ctx);
  ok::Json j = header("verify ratio-lemma", o);
  j["ctx"] = ok::Json{{"n", ctx.n}, {"m", ctx.m}};
  j["young"] = ok::to_json(b.a);
  j["modified_near_zero"] = b.linearized;
  j["report"] = ok::to_json(rep);
  emit(o, json_text(j));
  return rep.pass ? 0 : kExitFail;
}

int harness_run(const Options& o) {
  require_format(o, {"json", "csv"});
  const ok::RasterDomain d = load_domain(o);
  const ok::EmbeddingContext ctx = context(o);
  ok::HarnessOptions ho;
  ho.seed = o.seed;
  ho.linearize_at = o.linearize_at;
  const ok::HarnessSetup setup = ok::prepare_harness(d, ok::parse_young(o.young), ctx, ho);

  const std::vector<ok::Point> xs =
      o.center.empty() ? ok::random_points(d, o.centers, o.seed) : std::vector<ok::Point>{point_from(o.center, d.dim())};
  // Ordered by (center index, R).
  std::vector<ok::NecessityReport> reports(xs.size() * o.radii.size());
  ok::parallel_for(reports.size(), worker_count(o), [&](std::size_t k) {
    reports[k] = ok::necessity_verdict(setup, d, xs[k / o.radii.size()], o.radii[k % o.radii.size()]);
  });

  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass;
  if (o.format == "csv") {
    std::ostringstream os;
    ok::write_chain_csv(os, reports);
    emit(o, os.str());
  } else {
    ok::Json j = header("harness run", o);
    j["setup"] = ok::to_json(setup);
    j["all_pass"] = all_pass;
    ok::Json list = ok::Json::array();
    for (const auto& r : reports) list.push_back(ok::to_json(r));
    j["reports"] = std::move(list);
    emit(o, json_text(j));
  }
  return all_pass ? 0 : kExitFail;
}

// ---- wiring ---------------------------------------------------------------

void add_common(CLI::App* c, Options& o) {
  c->add_option("--seed", o.seed, "random seed (echoed into every report)");
  c->add_option("--workers", o.workers, "worker threads (fallback: ORLICZKIT_WORKERS)");
  c->add_option("--out", o.out, "output path (default: stdout)");
  c->add_option("--format", o.format, "output format");
}

void add_young(CLI::App* c, Options& o) {
  c->add_option("--young", o.young, "power:p[,c] | powerlog:p[,lambda] | linear[:c] | YF1 path");
}

void add_ctx(CLI::App* c, Options& o, bool with_m) {
  c->add_option("--n", o.n, "space dimension");
  if (with_m) c->add_option("--m", o.m, "Sobolev order");
}

void add_domain(CLI::App* c, Options& o) {
  c->add_option("--gen", o.gen, "cube | ball | lipschitz-graph | inward-cusp | fat-carpet");
  c->add_option("--domain", o.domain, "ORD1 raster file");
  c->add_option("--n", o.n, "space dimension");
  c->add_option("--h", o.h, "cell size");
  c->add_option("--side", o.side, "cube edge");
  c->add_option("--radius", o.radius, "ball radius");
  c->add_option("--gamma", o.gamma, "cusp exponent");
  c->add_option("--stages", o.stages, "carpet stages");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orliczkit: Orlicz-Sobolev embeddings and measure density on rasters"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  Options o;
  using Handler = int (*)(const Options&);
  Handler handler = nullptr;
  const auto leaf = [&](CLI::App* parent, const char* name, const char* help, Handler h) {
    CLI::App* c = parent->add_subcommand(name, help);
    c->callback([&handler, h] { handler = h; });
    add_common(c, o);
    return c;
  };

  CLI::App* young = app.add_subcommand("young", "Young function operations");
  young->require_subcommand(1);
  add_young(leaf(young, "conjugate", "conjugate function (YF1)", young_conjugate), o);
  {
    CLI::App* c = leaf(young, "invert", "generalized inverse at a level", young_invert);
    add_young(c, o);
    c->add_option("--r", o.r, "level")->required();
    c->add_option("--side", o.side_name, "left | right");
  }
  add_young(leaf(young, "show", "summary and invariant check", young_show), o);

  CLI::App* target = app.add_subcommand("target", "optimal embedding targets");
  target->require_subcommand(1);
  for (auto [name, help, h] : {std::tuple{"first", "first-order target (YF1)", &target_first},
                               std::tuple{"glue", "first-order target glued to A near 0 (YF1)", &target_glue}}) {
    CLI::App* c = leaf(target, name, help, h);
    add_young(c, o);
    add_ctx(c, o, false);
  }
  {
    CLI::App* c = leaf(target, "higher", "higher-order target (YF1)", target_higher);
    add_young(c, o);
    add_ctx(c, o, true);
  }

  CLI::App* boyd = app.add_subcommand("boyd", "Boyd index and growth conditions");
  boyd->require_subcommand(1);
  {
    CLI::App* c = leaf(boyd, "index", "upper Boyd index", boyd_index);
    add_young(c, o);
    add_ctx(c, o, true);
  }
  {
    CLI::App* c = leaf(boyd, "check", "growth condition ii or iii at alpha", boyd_check);
    add_young(c, o);
    c->add_option("--alpha", o.alpha, "exponent in (0, 1)");
    c->add_option("--variant", o.variant, "ii | iii");
  }

  CLI::App* norm = app.add_subcommand("norm", "Orlicz and Orlicz-Sobolev norms on a raster");
  norm->require_subcommand(1);
  for (auto [name, help, h] : {std::tuple{"lux", "Luxemburg norm of a field", &norm_lux},
                               std::tuple{"sobolev", "Orlicz-Sobolev norm of a field", &norm_sobolev}}) {
    CLI::App* c = leaf(norm, name, help, h);
    add_young(c, o);
    add_domain(c, o);
    c->add_option("--field", o.field, "chi | x1 | x1x2 | r2");
    if (std::string(name) == "sobolev") c->add_option("--m", o.m, "Sobolev order");
  }

  CLI::App* domain = app.add_subcommand("domain", "raster domains");
  domain->require_subcommand(1);
  add_domain(leaf(domain, "gen", "generate a raster (ORD1)", domain_gen), o);
  {
    CLI::App* c = leaf(domain, "density", "measure density sweep", domain_density);
    add_domain(c, o);
    c->add_option("--points", o.points, "sample points");
    c->add_option("--mode", o.mode, "random | boundary");
    c->add_flag("!--no-coarse", o.coarse, "skip the comparison at 2h");
  }
  {
    CLI::App* c = leaf(domain, "halve", "halving radius of B(x, R)", domain_halve);
    add_domain(c, o);
    c->add_option("--x", o.center, "center coordinates")->delimiter(',')->required();
    c->add_option("--R", o.big_r, "outer radius");
  }

  CLI::App* verify = app.add_subcommand("verify", "inverse-ratio checks");
  verify->require_subcommand(1);
  {
    CLI::App* c = leaf(verify, "ratio-lemma", "decay of the inverse ratio", verify_ratio_lemma);
    add_young(c, o);
    add_ctx(c, o, true);
    c->add_option("--linearize-at", o.linearize_at, "tangent point used if the integrability gate fails");
  }

  CLI::App* harness = app.add_subcommand("harness", "necessity harness");
  harness->require_subcommand(1);
  {
    CLI::App* c = leaf(harness, "run", "radius-halving verdicts at random centers", harness_run);
    add_young(c, o);
    add_domain(c, o);
    c->add_option("--m", o.m, "Sobolev order");
    c->add_option("--radii", o.radii, "outer radii")->delimiter(',');
    c->add_option("--centers", o.centers, "random centers");
    c->add_option("--x", o.center, "single center instead of random ones")->delimiter(',');
    c->add_option("--linearize-at", o.linearize_at, "tangent point used if the integrability gate fails");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  if (handler == nullptr) {
    std::cerr << app.help();
    return kExitUsage;
  }
  try {
    return handler(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
