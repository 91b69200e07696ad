#include "cvf/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "cvf/checker.hpp"
#include "cvf/errors.hpp"
#include "cvf/sampling.hpp"

namespace cvf {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ConfigError(path, msg);
}

const json* find(const json& j, const char* key) {
  const auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

double as_num(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

double num_or(const json& j, const std::string& path, const char* key, double def) {
  const json* p = find(j, key);
  return p ? as_num(*p, path + "." + key) : def;
}

int int_or(const json& j, const std::string& path, const char* key, int def) {
  const json* p = find(j, key);
  if (!p) return def;
  if (!p->is_number_integer()) fail(path + "." + key, "expected an integer");
  return p->get<int>();
}

std::string str_or(const json& j, const std::string& path, const char* key,
                   const std::string& def) {
  const json* p = find(j, key);
  if (!p) return def;
  if (!p->is_string()) fail(path + "." + key, "expected a string");
  return p->get<std::string>();
}

Vec vec_or(const json& j, const std::string& path, const char* key) {
  const json* p = find(j, key);
  if (!p) return {};
  if (!p->is_array()) fail(path + "." + key, "expected an array of numbers");
  Vec v;
  for (std::size_t i = 0; i < p->size(); ++i)
    v.push_back(as_num((*p)[i], path + "." + key + "[" + std::to_string(i) + "]"));
  return v;
}

Mat mat_or(const json& j, const std::string& path, const char* key) {
  const json* p = find(j, key);
  if (!p) return {};
  const std::string full = path + "." + key;
  if (!p->is_array()) fail(full, "expected an array of rows");
  const int n = static_cast<int>(p->size());
  Mat m(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const json& row = (*p)[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      fail(full, "expected a square matrix");
    for (int k = 0; k < n; ++k)
      m.at(i, k) = as_num(row[k], full + "[" + std::to_string(i) + "]");
  }
  return m;
}

const std::set<std::string>& known_checks() {
  static const std::set<std::string> s{
      "ab_system", "finsler",     "riemann",        "kang",       "flow",
      "c_invariant", "closed_conformal", "closedness", "lemma41",
      "s_curvature", "flag_agreement", "delta_const", "tau0", "bounds"};
  return s;
}

ModelParams parse_params(const json& j, const std::string& path) {
  ModelParams p;
  p.lambda = num_or(j, path, "lambda", 0.0);
  p.mu = num_or(j, path, "mu", 0.0);
  p.tau = num_or(j, path, "tau", 0.0);
  p.e = vec_or(j, path, "e");
  p.gamma = vec_or(j, path, "gamma");
  p.eta = vec_or(j, path, "eta");
  p.d = vec_or(j, path, "d");
  p.Q = mat_or(j, path, "Q");
  p.k1 = num_or(j, path, "k1", 0.0);
  p.k2 = num_or(j, path, "k2", 0.0);
  p.k3 = num_or(j, path, "k3", 0.0);
  return p;
}

// Everything a check can ask for, built once per run.
struct Objects {
  std::optional<MetricField> a;
  std::optional<OneFormField> b;
  std::optional<ConformalPair> vc;
  std::optional<PhiFunction> phi;
  std::optional<UVWTriple> triple;
  std::optional<RandersModel> model;
  double metric_mu = 0.0;
};

Objects instantiate(const Scenario& sc) {
  Objects o;
  const int n = sc.dimension;
  if (sc.metric) {
    const MetricSpec& ms = *sc.metric;
    if (ms.kind == "euclidean")
      o.a = euclidean_metric(n);
    else if (ms.kind == "projective")
      o.a = constant_curvature_metric(ms.mu, CurvatureForm::projective, n);
    else
      o.a = constant_curvature_metric(ms.mu, CurvatureForm::conformal, n);
    o.metric_mu = ms.mu;
    o.a->domain.radius = sc.sampling.radius;
  }
  if (sc.oneform) {
    const OneFormSpec& os = *sc.oneform;
    if (os.kind == "zero") {
      o.b = zero_oneform(n);
    } else if (os.kind == "constant") {
      if (static_cast<int>(os.coeffs.size()) != n)
        fail("oneform.coeffs", "expected " + std::to_string(n) + " entries");
      o.b = constant_oneform(os.coeffs);
    } else if (os.kind == "pair_rho") {
      o.b = projective_pair(os.lambda, os.mu, os.e, n).rho;
    } else {  // prop52_beta
      o.b = make_randers_model(os.lambda, os.mu, os.e, n).beta;
    }
  }
  if (sc.vector_field)
    o.vc = conformal_field(sc.vector_field->family, sc.vector_field->params, n);
  if (sc.phi) {
    const PhiSpec& ps = *sc.phi;
    if (ps.kind == "randers")
      o.phi = phi_randers();
    else if (ps.kind == "randers_type")
      o.phi = phi_randers_type(ps.k, ps.eps);
    else if (ps.kind == "quadratic")
      o.phi = phi_quadratic(ps.kappa, ps.eps);
    else if (ps.kind == "sqrt_quad")
      o.phi = phi_sqrt_quad(ps.k);
    else
      o.phi = phi_power_series(ps.coeffs);
  }
  if (sc.triple) {
    const TripleSpec& ts = *sc.triple;
    if (ts.kind == "navigation")
      o.triple = navigation_triple();
    else if (ts.kind == "randers_projective")
      o.triple = randers_projective_triple();
    else if (ts.kind == "closed_form")
      o.triple = uvw_closed_form_triple(ts.k1, ts.k2, ts.k3, ts.t_max);
    else
      o.triple = uvw_ode_triple(ts.k1, ts.k2, ts.k3, ts.init, ts.t_max);
  }
  if (sc.model) {
    o.model = make_randers_model(sc.model->lambda, sc.model->mu, sc.model->e, n);
    o.model->alpha.domain.radius = sc.sampling.radius;
  }
  return o;
}

// Residual-per-sample loop shared by the scalar checks; degenerate
// samples are retried and counted, hard failure past the cap.
template <class Fn>
CheckReport sampled(const std::string& name, int count, std::uint64_t seed,
                    double tol, Fn&& residual_at) {
  CheckReport rep;
  rep.name = name;
  rep.seed = seed;
  rep.tolerance = tol;
  Sampler smp(seed);
  int rejected = 0;
  const int cap = 100 * count;
  while (static_cast<int>(rep.residuals.size()) < count) {
    try {
      rep.residuals.push_back(residual_at(smp));
    } catch (const std::runtime_error&) {
      if (++rejected > cap) throw;
    }
  }
  if (rejected > 0) rep.note = std::to_string(rejected) + " samples rejected";
  rep.finalize();
  return rep;
}

std::vector<CheckReport> run_check(const std::string& name, const Scenario& sc,
                                   Objects& o, int count, std::uint64_t seed,
                                   double tol) {
  const int n = sc.dimension;
  auto metric = [&]() -> const MetricField& {
    if (!o.a) fail("metric", "check '" + name + "' requires a metric");
    return *o.a;
  };
  auto oneform = [&]() -> const OneFormField& {
    if (!o.b) fail("oneform", "check '" + name + "' requires a one-form");
    return *o.b;
  };
  auto vfield = [&]() -> const ConformalPair& {
    if (!o.vc) fail("vector_field", "check '" + name + "' requires a vector field");
    return *o.vc;
  };
  auto phi = [&]() -> const PhiFunction& {
    if (!o.phi) fail("phi", "check '" + name + "' requires a phi spec");
    return *o.phi;
  };
  auto triple = [&]() -> const UVWTriple& {
    if (!o.triple) fail("triple", "check '" + name + "' requires a triple spec");
    return *o.triple;
  };
  auto model = [&]() -> const RandersModel& {
    if (!o.model) fail("model", "check '" + name + "' requires a model spec");
    return *o.model;
  };

  if (name == "ab_system") {
    auto pr = check_ab_system(metric(), oneform(), vfield().V, vfield().c, count,
                              seed, tol);
    return {pr.matrix, pr.vector};
  }
  if (name == "finsler") {
    FinslerMetric f = ab_metric(metric(), oneform(), phi());
    return {check_conformal_finsler(f, vfield().V, vfield().c, count, seed, tol)};
  }
  if (name == "riemann") {
    return {check_conformal_riemann(metric(), vfield().V, vfield().c, count, seed,
                                    tol)};
  }
  if (name == "kang") {
    const MetricField& a = metric();
    const OneFormField& b = oneform();
    const PhiFunction& p = phi();
    const ConformalPair& vc = vfield();
    return {sampled("kang", count, seed, tol, [&](Sampler& smp) {
      const Vec x = smp.metric_point(a);
      const Vec y = smp.unit_sphere(n);
      return kang_residual(a, b, p, vc.V, vc.c, x, y);
    })};
  }
  if (name == "flow") {
    const MetricField& a = metric();
    const FinslerMetric f = ab_metric(a, oneform(), phi());
    const ConformalPair& vc = vfield();
    CheckReport rep;
    rep.name = "flow";
    rep.seed = seed;
    rep.tolerance = tol;
    const double c0 = scalar_value(vc.c, a.domain.center);
    Sampler probe(seed ^ 0x9e3779b97f4a7c15ull);
    double cdev = 0.0;
    for (int i = 0; i < 5; ++i) {
      const Vec x = probe.point_in_ball(a.domain);
      cdev = std::max(cdev, std::abs(scalar_value(vc.c, x) - c0));
    }
    if (cdev > 1e-8) {
      rep.residuals = {cdev};
      rep.note = "conformal factor is not constant; finite flow law inapplicable";
      rep.finalize();
      rep.pass = false;
      return {rep};
    }
    const Vec t_grid{0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
    Sampler smp(seed);
    const int traj = std::min(count, 8);
    int rejected = 0;
    for (int i = 0; i < traj;) {
      const Vec x = smp.metric_point(a);
      const Vec y = smp.unit_sphere(n);
      try {
        const FlowCheckResult rr = flow_check(f, vc.V, c0, x, y, t_grid);
        rep.residuals.insert(rep.residuals.end(), rr.deviations.begin(),
                             rr.deviations.end());
        rep.truncated = rep.truncated || rr.truncated;
        ++i;
      } catch (const std::runtime_error&) {
        if (++rejected > 20) throw;
      }
    }
    if (rejected > 0) rep.note = std::to_string(rejected) + " trajectories rejected";
    const bool trunc = rep.truncated;
    rep.finalize();
    rep.truncated = trunc;
    return {rep};
  }
  if (name == "c_invariant") {
    return {c_invariant_report(vfield().c, o.metric_mu, metric(), count, seed, tol)};
  }
  if (name == "closed_conformal") {
    return {closed_conformal_residual(vfield().c, o.metric_mu, metric(), count, seed,
                                      tol)};
  }
  if (name == "closedness") {
    const OneFormField& b = oneform();
    const Domain dom =
        o.a ? o.a->domain : Domain::ball(n, sc.sampling.radius);
    return {sampled("closedness", count, seed, tol, [&](Sampler& smp) {
      return closedness_residual(b, smp.point_in_ball(dom));
    })};
  }
  if (name == "lemma41") {
    auto lr = check_lemma41(metric(), oneform(), vfield().V, vfield().c, triple(),
                            count, seed, tol, 10.0 * tol);
    return {lr.base, lr.deformed};
  }
  if (name == "s_curvature") {
    const RandersModel& m = model();
    return {sampled("s_curvature", count, seed, tol, [&](Sampler& smp) {
      return s_curvature_residual(m.alpha, m.beta, m.tau_field,
                                  smp.metric_point(m.alpha));
    })};
  }
  if (name == "flag_agreement") {
    const RandersModel& m = model();
    return {sampled("flag_agreement", count, seed, tol, [&](Sampler& smp) {
      const Vec x = smp.metric_point(m.alpha);
      const Vec y = smp.unit_sphere(m.n);
      const double kc = flag_curvature_closed_form(m, x, y);
      const double kp = flag_curvature_projective(m.alpha, m.beta, x, y);
      return std::abs(kp - kc) / (1.0 + std::abs(kc));
    })};
  }
  if (name == "delta_const") {
    const RandersModel& m = model();
    const double dref = std::sqrt(randers_delta_sq(m, m.alpha.domain.center));
    return {sampled("delta_const", count, seed, tol, [&](Sampler& smp) {
      const double d = std::sqrt(randers_delta_sq(m, smp.metric_point(m.alpha)));
      return std::abs(d - dref) / (1.0 + dref);
    })};
  }
  if (name == "tau0") {
    const RandersModel& m = model();
    return {sampled("tau0", count, seed, tol, [&](Sampler& smp) {
      const Vec x = smp.metric_point(m.alpha);
      const Vec y = smp.unit_sphere(m.n);
      return tau0_identity_residual(m, x, y);
    })};
  }
  // bounds
  const RandersModel& m = model();
  return {sampled("bounds", count, seed, tol, [&](Sampler& smp) {
    const Vec x = smp.metric_point(m.alpha);
    const Vec y = smp.unit_sphere(m.n);
    const CompactCaseData q = compact_case_quantities(m, x, y);
    const double slack =
        std::min(std::min(q.K - q.K1, q.K2 - q.K),
                 std::min(q.K - q.bound_lo, q.bound_hi - q.K));
    return std::max(0.0, -slack);
  })};
}

}  // namespace

Scenario parse_scenario(const json& j) {
  if (!j.is_object()) fail("$", "scenario must be a JSON object");
  Scenario sc;
  sc.raw = j;
  const json* ver = find(j, "schema_version");
  if (!ver) fail("schema_version", "missing required field");
  if (!ver->is_number_integer() || ver->get<int>() != kSchemaVersion)
    fail("schema_version", "expected " + std::to_string(kSchemaVersion));
  sc.name = str_or(j, "$", "name", "");
  sc.dimension = int_or(j, "$", "dimension", 3);
  if (sc.dimension < 2 || sc.dimension > Jet3::kMaxDim)
    fail("dimension", "must be between 2 and " + std::to_string(Jet3::kMaxDim));
  sc.tolerance = num_or(j, "$", "tolerance", 1e-9);
  if (!(sc.tolerance > 0.0)) fail("tolerance", "must be positive");

  if (const json* s = find(j, "sampling")) {
    sc.sampling.count = int_or(*s, "sampling", "count", 100);
    if (sc.sampling.count < 1) fail("sampling.count", "must be >= 1");
    if (const json* p = find(*s, "seed")) {
      if (!p->is_number_integer()) fail("sampling.seed", "expected an integer");
      sc.sampling.seed = p->get<std::uint64_t>();
    }
    sc.sampling.radius = num_or(*s, "sampling", "radius", 0.4);
    if (!(sc.sampling.radius > 0.0)) fail("sampling.radius", "must be positive");
  }

  const json* cj = find(j, "checks");
  if (!cj || !cj->is_array() || cj->empty())
    fail("checks", "expected a non-empty array");
  int idx = 0;
  for (const json& c : *cj) {
    const std::string path = "checks[" + std::to_string(idx) + "]";
    CheckSpec ck;
    if (c.is_string()) {
      ck.name = c.get<std::string>();
    } else if (c.is_object()) {
      ck.name = str_or(c, path, "name", "");
      if (ck.name.empty()) fail(path + ".name", "missing required field");
      if (find(c, "tolerance")) {
        const double t = num_or(c, path, "tolerance", 0.0);
        if (!(t > 0.0)) fail(path + ".tolerance", "must be positive");
        ck.tolerance = t;
      }
    } else {
      fail(path, "expected a string or an object");
    }
    if (!known_checks().count(ck.name))
      fail(path, "unknown check identifier '" + ck.name + "'");
    sc.checks.push_back(std::move(ck));
    ++idx;
  }

  if (const json* mj = find(j, "metric")) {
    MetricSpec ms;
    ms.kind = str_or(*mj, "metric", "kind", "euclidean");
    if (ms.kind != "euclidean" && ms.kind != "projective" && ms.kind != "conformal")
      fail("metric.kind", "unknown metric kind '" + ms.kind + "'");
    ms.mu = num_or(*mj, "metric", "mu", 0.0);
    sc.metric = ms;
  }
  if (const json* oj = find(j, "oneform")) {
    OneFormSpec os;
    os.kind = str_or(*oj, "oneform", "kind", "zero");
    if (os.kind != "zero" && os.kind != "constant" && os.kind != "pair_rho" &&
        os.kind != "prop52_beta")
      fail("oneform.kind", "unknown one-form kind '" + os.kind + "'");
    os.coeffs = vec_or(*oj, "oneform", "coeffs");
    os.lambda = num_or(*oj, "oneform", "lambda", 0.0);
    os.mu = num_or(*oj, "oneform", "mu", 0.0);
    os.e = vec_or(*oj, "oneform", "e");
    sc.oneform = os;
  }
  if (const json* vj = find(j, "vector_field")) {
    VectorFieldSpec vs;
    vs.family = str_or(*vj, "vector_field", "family", "");
    static const std::set<std::string> families{"lemma22_cc", "lemma22_cf",
                                                "closed_i",   "closed_ii",
                                                "thm2_i",     "thm2_ii"};
    if (!families.count(vs.family))
      fail("vector_field.family", "unknown family '" + vs.family + "'");
    if (const json* pj = find(*vj, "params"))
      vs.params = parse_params(*pj, "vector_field.params");
    sc.vector_field = vs;
  }
  if (const json* pj = find(j, "phi")) {
    PhiSpec ps;
    ps.kind = str_or(*pj, "phi", "kind", "randers");
    static const std::set<std::string> kinds{"randers", "randers_type", "quadratic",
                                             "sqrt_quad", "power_series"};
    if (!kinds.count(ps.kind)) fail("phi.kind", "unknown phi kind '" + ps.kind + "'");
    ps.k = num_or(*pj, "phi", "k", 1.0);
    ps.eps = num_or(*pj, "phi", "eps", 0.0);
    ps.kappa = num_or(*pj, "phi", "kappa", 0.0);
    ps.coeffs = vec_or(*pj, "phi", "coeffs");
    sc.phi = ps;
  }
  if (const json* tj = find(j, "triple")) {
    TripleSpec ts;
    ts.kind = str_or(*tj, "triple", "kind", "navigation");
    static const std::set<std::string> kinds{"navigation", "randers_projective",
                                             "closed_form", "ode"};
    if (!kinds.count(ts.kind))
      fail("triple.kind", "unknown triple kind '" + ts.kind + "'");
    ts.k1 = num_or(*tj, "triple", "k1", 0.0);
    ts.k2 = num_or(*tj, "triple", "k2", 0.0);
    ts.k3 = num_or(*tj, "triple", "k3", 0.0);
    ts.t_max = num_or(*tj, "triple", "t_max", 0.81);
    const Vec init = vec_or(*tj, "triple", "init");
    if (!init.empty()) {
      if (init.size() != 3) fail("triple.init", "expected 3 entries");
      ts.init = {init[0], init[1], init[2]};
    }
    sc.triple = ts;
  }
  if (const json* mj = find(j, "model")) {
    const std::string kind = str_or(*mj, "model", "kind", "prop52");
    if (kind != "prop52" && kind != "prop52_randers")
      fail("model.kind", "unknown model kind '" + kind + "'");
    ModelSpec ms;
    ms.lambda = num_or(*mj, "model", "lambda", 0.0);
    ms.mu = num_or(*mj, "model", "mu", 1.0);
    ms.e = vec_or(*mj, "model", "e");
    sc.model = ms;
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("file", "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    fail("file", std::string("invalid JSON: ") + e.what());
  }
  return parse_scenario(j);
}

nlohmann::json RunReport::to_json() const {
  json j;
  j["version"] = version;
  j["overall_pass"] = overall_pass;
  j["wall_ms"] = wall_ms;
  j["scenario"] = scenario_echo;
  json arr = json::array();
  for (const CheckReport& c : checks) arr.push_back(c.to_json());
  j["checks"] = arr;
  return j;
}

RunReport RunReport::from_json(const nlohmann::json& j) {
  RunReport r;
  r.version = j.at("version").get<std::string>();
  r.overall_pass = j.at("overall_pass").get<bool>();
  r.wall_ms = j.at("wall_ms").get<double>();
  r.scenario_echo = j.at("scenario");
  for (const auto& c : j.at("checks")) r.checks.push_back(CheckReport::from_json(c));
  return r;
}

RunReport run_scenario(const Scenario& s, const RunOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const int count = opt.samples.value_or(s.sampling.count);
  if (count < 1) fail("sampling.count", "must be >= 1");
  const std::uint64_t seed = opt.seed.value_or(s.sampling.seed);

  Objects o = instantiate(s);
  RunReport rep;
  rep.scenario_echo = s.raw;
  bool matched = false;
  for (const CheckSpec& ck : s.checks) {
    if (opt.check_filter && ck.name != *opt.check_filter) continue;
    matched = true;
    const double tol =
        opt.tolerance ? *opt.tolerance : ck.tolerance.value_or(s.tolerance);
    try {
      for (CheckReport& r : run_check(ck.name, s, o, count, seed, tol))
        rep.checks.push_back(std::move(r));
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      CheckReport r;
      r.name = ck.name;
      r.seed = seed;
      r.tolerance = tol;
      r.pass = false;
      r.note = std::string("aborted: ") + e.what();
      rep.checks.push_back(std::move(r));
    }
  }
  if (opt.check_filter && !matched)
    fail("--check", "no check named '" + *opt.check_filter + "' in scenario");

  rep.overall_pass = !rep.checks.empty();
  for (const CheckReport& r : rep.checks)
    rep.overall_pass = rep.overall_pass && r.pass;
  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

std::string catalog_table() {
  const auto& rows = catalog_entries();
  std::size_t w1 = 2, w2 = 6;
  for (const CatalogEntry& r : rows) {
    w1 = std::max(w1, r.id.size());
    w2 = std::max(w2, r.params.size());
  }
  std::ostringstream out;
  auto line = [&](const std::string& a, const std::string& b, const std::string& c) {
    out << a << std::string(w1 - a.size() + 2, ' ') << b
        << std::string(w2 - b.size() + 2, ' ') << c << "\n";
  };
  line("id", "params", "role");
  out << std::string(w1 + w2 + 24, '-') << "\n";
  for (const CatalogEntry& r : rows) line(r.id, r.params, r.role);
  return out.str();
}

}  // namespace cvf
