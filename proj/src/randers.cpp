#include "cvf/randers.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "cvf/catalog.hpp"
#include "cvf/errors.hpp"
#include "cvf/params.hpp"

namespace cvf {

namespace {

Jet3 cdot(const Vec& v, const JetVec& x) {
  Jet3 s = Jet3::constant(x[0].dim(), x[0].order(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) s += x[i] * v[i];
  return s;
}

double sq(double t) { return t * t; }

// p^2 = |e|^2 + (l^2|x|^2 + 2l<e,x> - mu<e,x>^2) / (1 + mu|x|^2)
Jet3 p2_jet(double lambda, double mu, const Vec& e, const JetVec& x) {
  const Jet3 x2 = norm_sq(std::span<const Jet3>(x));
  const Jet3 ex = cdot(e, x);
  const double e2 = norm_sq(std::span<const double>(e));
  return e2 + (x2 * sq(lambda) + ex * (2.0 * lambda) - ex * ex * mu) / (1.0 + x2 * mu);
}

// p_i = {(l - mu<e,x>) x_i + (1 + mu|x|^2) e_i} / (1 + mu|x|^2)^{3/2}
JetVec rho_components(double lambda, double mu, const Vec& e, const JetVec& x) {
  const int n = static_cast<int>(x.size());
  const Jet3 w = 1.0 + norm_sq(std::span<const Jet3>(x)) * mu;
  const Jet3 den = w * sqrt(w);
  const Jet3 coef = lambda - cdot(e, x) * mu;
  JetVec p(n);
  for (int i = 0; i < n; ++i) p[i] = (coef * x[i] + w * e[i]) / den;
  return p;
}

Jet3 xi_jet(double lambda, double mu, const Vec& e, const JetVec& x) {
  const double e2 = norm_sq(std::span<const double>(e));
  const Jet3 ex = cdot(e, x);
  const Jet3 rad = norm_sq(std::span<const Jet3>(x)) * (sq(lambda) + (1.0 + e2) * mu) +
                   (2.0 * lambda - ex * mu) * ex + (e2 + 1.0);
  return sqrt(rad);
}

}  // namespace

RandersModel make_randers_model(double lambda, double mu, Vec e, int n) {
  if (n < 2) throw std::invalid_argument("randers model needs dimension >= 2");
  e = sized_vec(e, n, "e");
  RandersModel m;
  m.lambda = lambda;
  m.mu = mu;
  m.e = e;
  m.n = n;
  m.alpha = constant_curvature_metric(mu, CurvatureForm::projective, n);
  m.rho = OneFormField{n, [lambda, mu, e](const JetVec& x) {
            return rho_components(lambda, mu, e, x);
          }};
  m.beta = OneFormField{n, [lambda, mu, e, n](const JetVec& x) {
             const Jet3 den = sqrt(1.0 + p2_jet(lambda, mu, e, x));
             JetVec p = rho_components(lambda, mu, e, x);
             for (int i = 0; i < n; ++i) p[i] = p[i] / den;
             return p;
           }};
  m.tau_field = ScalarField{n, [lambda, mu, e](const JetVec& x) {
                  return (lambda - cdot(e, x) * mu) / (xi_jet(lambda, mu, e, x) * 2.0);
                }};
  m.c_field = ScalarField{n, [lambda, mu, e](const JetVec& x) {
                const Jet3 w = 1.0 + norm_sq(std::span<const Jet3>(x)) * mu;
                return (cdot(e, x) * mu - lambda) / (sqrt(w) * 2.0);
              }};
  m.b2_field = ScalarField{n, [lambda, mu, e](const JetVec& x) {
                 const Jet3 p2 = p2_jet(lambda, mu, e, x);
                 return p2 / (1.0 + p2);
               }};
  return m;
}

double randers_xi(const RandersModel& m, std::span<const double> x) {
  const double e2 = norm_sq(std::span<const double>(m.e));
  const double ex = dot(m.e, x);
  const double rad = (sq(m.lambda) + (1.0 + e2) * m.mu) * norm_sq(x) +
                     (2.0 * m.lambda - m.mu * ex) * ex + e2 + 1.0;
  if (rad <= 0.0) throw EvalError("xi: nonpositive radicand " + std::to_string(rad));
  return std::sqrt(rad);
}

double randers_tau(const RandersModel& m, std::span<const double> x) {
  return (m.lambda - m.mu * dot(m.e, x)) / (2.0 * randers_xi(m, x));
}

double randers_c(const RandersModel& m, std::span<const double> x) {
  const double w = 1.0 + m.mu * norm_sq(x);
  if (w <= 0.0) throw EvalError("c: chart factor 1 + mu|x|^2 = " + std::to_string(w));
  return (-m.lambda + m.mu * dot(m.e, x)) / (2.0 * std::sqrt(w));
}

double randers_p2(const RandersModel& m, std::span<const double> x) {
  const double w = 1.0 + m.mu * norm_sq(x);
  if (w <= 0.0) throw EvalError("p2: chart factor 1 + mu|x|^2 = " + std::to_string(w));
  const double ex = dot(m.e, x);
  return norm_sq(std::span<const double>(m.e)) +
         (sq(m.lambda) * norm_sq(x) + 2.0 * m.lambda * ex - m.mu * sq(ex)) / w;
}

double randers_b2(const RandersModel& m, std::span<const double> x) {
  const double p2 = randers_p2(m, x);
  return p2 / (1.0 + p2);
}

double randers_delta_sq(const RandersModel& m, std::span<const double> x) {
  const double c = randers_c(m, x);
  return grad_norm_sq(m.c_field, m.alpha, x) + m.mu * sq(c);
}

double randers_c_from_tau(const RandersModel& m, std::span<const double> x) {
  const double b2 = randers_b2(m, x);
  if (b2 >= 1.0) throw EvalError("c: b^2 >= 1 at sample");
  return -randers_tau(m, x) / std::sqrt(1.0 - b2);
}

double s_curvature_residual(const MetricField& a, const OneFormField& b,
                            const ScalarField& tau, std::span<const double> x) {
  const Mat bij = covariant_d1_oneform(b, a, x);
  const SymMatrix aij = metric_value(a, x);
  const Vec bi = oneform_value(b, x);
  const double t = scalar_value(tau, x);
  double r = 0.0;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      r = std::max(r, std::abs(bij.at(i, j) - 2.0 * t * (aij.at(i, j) - bi[i] * bi[j])));
  return r;
}

double flag_curvature_closed_form(const RandersModel& m, std::span<const double> x,
                                  std::span<const double> y) {
  const double a2 = alpha_sq_value(m.alpha, x, y);
  if (a2 <= 0.0) throw EvalError("flag curvature: alpha^2 <= 0");
  const double al = std::sqrt(a2);
  const double be = beta_value(m.beta, x, y);
  const double F = al + be;
  if (F <= 0.0) throw EvalError("flag curvature: F <= 0");
  const double t = randers_tau(m, x);
  return 0.75 * (m.mu + 4.0 * sq(t)) * (al - be) / F + 0.25 * m.mu;
}

double flag_curvature_projective(const MetricField& a, const OneFormField& b,
                                 std::span<const double> x,
                                 std::span<const double> y) {
  const int n = a.dim;
  const double mu_est = scalar_curvature(a, x) / (n * (n - 1));
  const double a2 = alpha_sq_value(a, x, y);
  if (a2 <= 0.0) throw EvalError("flag curvature: alpha^2 <= 0");
  const double al = std::sqrt(a2);
  const double F = al + beta_value(b, x, y);
  if (F <= 0.0) throw EvalError("flag curvature: F <= 0");
  const Mat d1 = covariant_d1_oneform(b, a, x);
  const T3 d2 = covariant_d2_oneform(b, a, x);
  double Phi = 0.0, Psi = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Phi += d1.at(i, j) * y[i] * y[j];
      for (int k = 0; k < n; ++k) Psi += d2.at(i, j, k) * y[i] * y[j] * y[k];
    }
  const double half = Phi / (2.0 * F);
  return (mu_est * a2 + 3.0 * sq(half) - Psi / (2.0 * F)) / sq(F);
}

double tau0_identity_residual(const RandersModel& m, std::span<const double> x,
                              std::span<const double> y) {
  const Vec dtau = scalar_gradient(m.tau_field, x);
  const double tau0 = dot(dtau, y);
  const double t = randers_tau(m, x);
  const double be = beta_value(m.beta, x, y);
  return std::abs(tau0 + 0.5 * (m.mu + 4.0 * sq(t)) * be);
}

CompactCaseData compact_case_quantities(const RandersModel& m,
                                        std::span<const double> x,
                                        std::span<const double> y) {
  if (m.mu <= 0.0) throw EvalError("compact case requires mu > 0");
  const double c = randers_c(m, x);
  const double g = grad_norm_sq(m.c_field, m.alpha, x);  // = d^2 - mu c^2
  const double d2 = g + m.mu * sq(c);
  const double R = 4.0 * d2 + sq(m.mu) - 4.0 * m.mu * sq(c);
  if (R <= 0.0)
    throw EvalError("compact case: nonpositive radicand " + std::to_string(R));
  const double S = std::sqrt(R);
  const double M = 4.0 * d2 + sq(m.mu);
  const Vec dc = scalar_gradient(m.c_field, x);
  const double c0 = dot(dc, y);
  const double a2 = alpha_sq_value(m.alpha, x, y);
  if (a2 <= 0.0) throw EvalError("compact case: alpha^2 <= 0");
  const double al = std::sqrt(a2);
  const double G = std::sqrt(std::max(0.0, g));

  CompactCaseData out;
  out.beta = 2.0 * c0 / S;
  out.K = 0.75 * m.mu * M * (al * S - 2.0 * c0) / (R * (al * S + 2.0 * c0)) +
          0.25 * m.mu;
  out.tau_sq = sq(m.mu) * sq(c) / R;
  out.A = G / S;
  out.A_sup = std::sqrt(d2) / std::sqrt(M);
  out.K1 = 0.75 * m.mu * M * (S - 2.0 * G) / (R * (S + 2.0 * G)) + 0.25 * m.mu;
  out.K2 = 0.75 * m.mu * M * (S + 2.0 * G) / (R * (S - 2.0 * G)) + 0.25 * m.mu;
  out.K1_alt = 3.0 * M / (4.0 * m.mu) * sq(1.0 - 2.0 * out.A) + 0.25 * m.mu;
  out.K2_alt = 3.0 * M / (4.0 * m.mu) * sq(1.0 + 2.0 * out.A) + 0.25 * m.mu;
  const double dl = std::sqrt(d2);
  out.bound_lo = (6.0 * d2 + sq(m.mu) - 3.0 * dl * std::sqrt(M)) / m.mu;
  out.bound_hi = (6.0 * d2 + sq(m.mu) + 3.0 * dl * std::sqrt(M)) / m.mu;
  return out;
}

double delta_bar_of(double delta, double mu) {
  if (mu <= 0.0) throw EvalError("delta_bar: requires mu > 0");
  return 2.0 * std::sqrt(mu) * delta / std::sqrt(4.0 * sq(delta) + sq(mu));
}

}  // namespace cvf
