#include "cvf/catalog.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace cvf {

namespace {

Jet3 zero_like(const JetVec& x) { return Jet3::constant(x[0].dim(), x[0].order(), 0.0); }

Jet3 cdot(const Vec& a, const JetVec& x) {
  Jet3 s = zero_like(x);
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * a[i];
  return s;
}

Jet3 qx_component(const Mat& q, const JetVec& x, int i) {
  Jet3 s = zero_like(x);
  for (int k = 0; k < q.n; ++k) s += x[k] * q.at(i, k);
  return s;
}

}  // namespace

MetricField constant_curvature_metric(double mu, CurvatureForm form, int n) {
  if (n < 2) throw std::invalid_argument("constant_curvature_metric: n >= 2 required");
  Domain dom = Domain::ball(n, 0.5, mu);
  if (form == CurvatureForm::projective) {
    return {n, dom, [mu, n](const JetVec& x) {
              const Jet3 w = 1.0 + mu * norm_sq(x);
              const Jet3 w2 = w * w;
              JetMat m(n, zero_like(x));
              for (int i = 0; i < n; ++i) {
                for (int j = i; j < n; ++j) {
                  Jet3 e = (-mu) * x[i] * x[j];
                  if (i == j) e += w;
                  e = e / w2;
                  m.at(i, j) = e;
                  m.at(j, i) = e;
                }
              }
              return m;
            }};
  }
  return {n, dom, [mu, n](const JetVec& x) {
            const Jet3 w = 1.0 + mu * norm_sq(x);
            const Jet3 f = 4.0 / (w * w);
            JetMat m(n, zero_like(x));
            for (int i = 0; i < n; ++i) m.at(i, i) = f;
            return m;
          }};
}

ProjectivePair projective_pair(double lambda, double mu, Vec e, int n) {
  e = sized_vec(e, n, "e");
  MetricField h = constant_curvature_metric(mu, CurvatureForm::conformal, n);
  OneFormField rho{n, [lambda, mu, e, n](const JetVec& x) {
                     const Jet3 w = 1.0 + mu * norm_sq(x);
                     const Jet3 f = 4.0 / (w * w);
                     const Jet3 g = -2.0 * (lambda + mu * cdot(e, x));
                     JetVec p;
                     p.reserve(n);
                     for (int i = 0; i < n; ++i)
                       p.push_back(f * (g * x[i] + w * e[i]));
                     return p;
                   }};
  return {std::move(h), std::move(rho)};
}

ConformalPair conformal_field(const std::string& family, const ModelParams& p, int n) {
  const double lambda = p.lambda;
  const double mu = p.mu;

  if (family == "lemma22_cc" || family == "lemma22_cf") {
    const Vec d = sized_vec(p.d, n, "d");
    const Vec eta = sized_vec(p.eta, n, "eta");
    const Mat q = sized_mat(p.Q, n, "Q");
    validate_skew(q);
    if (family == "lemma22_cc") {
      VectorField V{n, [lambda, mu, d, eta, q, n](const JetVec& x) {
                      const Jet3 w = cvf::sqrt(1.0 + mu * norm_sq(x));
                      const Jet3 g = -2.0 * (lambda * w + cdot(d, x));
                      const Jet3 r = norm_sq(x) * 2.0 / (1.0 + w);
                      const Jet3 me = mu * cdot(eta, x);
                      JetVec v;
                      v.reserve(n);
                      for (int i = 0; i < n; ++i)
                        v.push_back(g * x[i] + r * d[i] + qx_component(q, x, i) +
                                    eta[i] + me * x[i]);
                      return v;
                    }};
      ScalarField c{n, [lambda, mu, d](const JetVec& x) {
                      return (lambda + cdot(d, x)) / cvf::sqrt(1.0 + mu * norm_sq(x));
                    }};
      return {std::move(V), std::move(c)};
    }
    VectorField V{n, [lambda, d, eta, q, n](const JetVec& x) {
                    const Jet3 g = -2.0 * (lambda + cdot(d, x));
                    const Jet3 r = norm_sq(x);
                    JetVec v;
                    v.reserve(n);
                    for (int i = 0; i < n; ++i)
                      v.push_back(g * x[i] + r * d[i] + qx_component(q, x, i) + eta[i]);
                    return v;
                  }};
    Vec md(n);
    for (int i = 0; i < n; ++i) md[i] = mu * eta[i] + d[i];
    ScalarField c{n, [lambda, mu, md](const JetVec& x) {
                    const Jet3 x2 = norm_sq(x);
                    return (lambda * (1.0 - mu * x2) + cdot(md, x)) / (1.0 + mu * x2);
                  }};
    return {std::move(V), std::move(c)};
  }

  if (family == "closed_i") {
    const Vec e = sized_vec(p.e, n, "e");
    VectorField V{n, [lambda, mu, e, n](const JetVec& x) {
                    const Jet3 w = cvf::sqrt(1.0 + mu * norm_sq(x));
                    JetVec v;
                    v.reserve(n);
                    for (int i = 0; i < n; ++i) v.push_back(w * (lambda * x[i] + e[i]));
                    return v;
                  }};
    ScalarField c{n, [lambda, mu, e](const JetVec& x) {
                    return (mu * cdot(e, x) - lambda) /
                           (2.0 * cvf::sqrt(1.0 + mu * norm_sq(x)));
                  }};
    return {std::move(V), std::move(c)};
  }

  if (family == "closed_ii") {
    const Vec e = sized_vec(p.e, n, "e");
    VectorField V{n, [lambda, mu, e, n](const JetVec& x) {
                    const Jet3 g = -2.0 * (lambda + mu * cdot(e, x));
                    const Jet3 w = 1.0 + mu * norm_sq(x);
                    JetVec v;
                    v.reserve(n);
                    for (int i = 0; i < n; ++i) v.push_back(g * x[i] + w * e[i]);
                    return v;
                  }};
    ScalarField c{n, [lambda, mu, e](const JetVec& x) {
                    const Jet3 x2 = norm_sq(x);
                    return (lambda * (1.0 - mu * x2) + 2.0 * mu * cdot(e, x)) /
                           (1.0 + mu * x2);
                  }};
    return {std::move(V), std::move(c)};
  }

  if (family == "thm2_i") {
    const Vec gamma = sized_vec(p.gamma, n, "gamma");
    const Mat q = sized_mat(p.Q, n, "Q");
    validate_skew(q);
    if (!p.e.empty()) validate_qe_zero(q, sized_vec(p.e, n, "e"));
    const double tau = p.tau;
    VectorField V{n, [tau, gamma, q, n](const JetVec& x) {
                    JetVec v;
                    v.reserve(n);
                    for (int i = 0; i < n; ++i)
                      v.push_back(-2.0 * tau * x[i] + qx_component(q, x, i) + gamma[i]);
                    return v;
                  }};
    return {std::move(V), constant_scalar(n, tau)};
  }

  if (family == "thm2_ii") {
    const Vec gamma = sized_vec(p.gamma, n, "gamma");
    const Mat q = sized_mat(p.Q, n, "Q");
    validate_skew(q);
    if (!p.e.empty())
      validate_killing_pair(q, gamma, sized_vec(p.e, n, "e"), lambda);
    VectorField V{n, [mu, gamma, q, n](const JetVec& x) {
                    const Jet3 g = 2.0 * mu * cdot(gamma, x);
                    const Jet3 w = 1.0 - mu * norm_sq(x);
                    JetVec v;
                    v.reserve(n);
                    for (int i = 0; i < n; ++i)
                      v.push_back(g * x[i] + w * gamma[i] + qx_component(q, x, i));
                    return v;
                  }};
    return {std::move(V), constant_scalar(n, 0.0)};
  }

  throw std::invalid_argument("conformal_field: unknown family \"" + family + "\"");
}

double FinslerMetric::value(std::span<const double> x, std::span<const double> y) const {
  return value_jets(seed_constants(x, a.dim, 0), seed_constants(y, a.dim, 0)).value();
}

Jet3 FinslerMetric::value_jets(const JetVec& x, const JetVec& y) const {
  const JetMat m = a.eval(x);
  const JetVec bv = b.eval(x);
  const int n = a.dim;
  Jet3 a2 = zero_like(x);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a2 += m.at(i, j) * y[i] * y[j];
  const Jet3 alpha = cvf::sqrt(a2);
  Jet3 beta = zero_like(x);
  for (int i = 0; i < n; ++i) beta += bv[i] * y[i];
  const Jet3 s = beta / alpha;
  if (std::abs(s.value()) > phi.s_max)
    throw RegularityError("s = beta/alpha = " + std::to_string(s.value()) +
                          " outside |s| <= " + std::to_string(phi.s_max));
  return alpha * phi_jet(phi, s);
}

PhaseFunction FinslerMetric::as_phase() const {
  FinslerMetric self = *this;
  return {a.dim,
          [self](const JetVec& x, const JetVec& y) { return self.value_jets(x, y); }};
}

FinslerMetric ab_metric(MetricField a, OneFormField b, PhiFunction phi) {
  return {std::move(a), std::move(b), std::move(phi)};
}

RandersPointData randers_beta_prop52(double lambda, double mu, const Vec& e,
                                     std::span<const double> x,
                                     std::span<const double> y) {
  const double x2 = norm_sq(x);
  const double ex = dot(e, x);
  const double e2 = norm_sq(e);
  const double rad =
      (lambda * lambda + (1.0 + e2) * mu) * x2 + (2.0 * lambda - mu * ex) * ex + e2 + 1.0;
  if (rad <= 0.0)
    throw EvalError("xi: nonpositive radicand (" + std::to_string(rad) + ")");
  const double xi = std::sqrt(rad);
  const double w = 1.0 + mu * x2;
  const double beta =
      ((lambda - mu * ex) / w * dot(x, y) + dot(e, y)) / xi;
  const double tau = (lambda - mu * ex) / (2.0 * xi);
  return {beta, xi, tau};
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> table{
      {"cc_projective", "{mu, n}", "metric, constant curvature, projective chart"},
      {"cc_conformal", "{mu, n}", "metric, constant curvature, conformal chart"},
      {"projective_pair", "{lambda, mu, e, n}", "metric + closed conformal 1-form"},
      {"lemma22_cc", "{lambda, mu, d, eta, Q}", "conformal field on cc_projective"},
      {"lemma22_cf", "{lambda, mu, d, eta, Q}", "conformal field on cc_conformal"},
      {"closed_i", "{lambda, mu, e}", "closed conformal field on cc_projective"},
      {"closed_ii", "{lambda, mu, e}", "closed conformal field on cc_conformal"},
      {"thm2_i", "{tau, Q, gamma; Qe=0}", "homothetic field, flat case"},
      {"thm2_ii", "{lambda, mu, gamma, Q; <gamma,e>=0, Qe=-2*lambda*gamma}",
       "Killing field"},
      {"prop52_randers", "{lambda, mu, e}", "projectively flat Randers model"},
      {"prop52", "{lambda, mu, e}", "alias of prop52_randers"},
      {"phi:randers", "{}", "phi(s) = 1 + s"},
      {"phi:randers_type", "{k, eps}", "phi(s) = sqrt(1 + k s^2) + eps s"},
      {"phi:quadratic", "{kappa, eps}", "phi(s) = 1 + kappa s + eps s^2"},
      {"phi:sqrt_quad", "{k}", "phi(s) = sqrt(1 + k s^2) (excluded by theorems)"},
      {"phi:power_series", "{a_0..a_K}", "phi(s) = sum a_i s^i"},
      {"triple:closed_form", "{k1, k2, k3}", "deformation triple, quadrature form"},
      {"triple:ode", "{k1, k2, k3, u0, v0, w0}", "deformation triple, integrated"},
      {"triple:navigation", "{}", "u = 1-t, v = t-1, w = t-1"},
      {"triple:randers_projective", "{}", "u = 1, v = 0, w = 1/sqrt(1-t)"},
  };
  return table;
}

}  // namespace cvf
