#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "cvf/catalog.hpp"
#include "cvf/geometry.hpp"
#include "cvf/randers.hpp"
#include "cvf/sampling.hpp"
#include "oracles.hpp"

using cvf::JetVec;
using cvf::MetricField;
using cvf::OneFormField;
using cvf::Vec;

namespace {

double frob_diff(const cvf::T4& a, const cvf::T4& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.v.size(); ++i)
    m = std::max(m, std::abs(a.v[i] - b.v[i]));
  return m;
}

}  // namespace

TEST_CASE("christoffel symbols of the flat and conformal forms") {
  const MetricField flat = cvf::euclidean_metric(3);
  const cvf::T3 g0 = cvf::christoffel(flat, Vec{0.2, -0.1, 0.4});
  CHECK(cvf::max_abs(g0) == doctest::Approx(0.0).epsilon(1e-14));

  // Conformal-flat mu=1 at x=(0.1,0): sigma_1 = -4x1/(1+|x|^2) = -0.39604.
  const MetricField sph = cvf::constant_curvature_metric(1.0, cvf::CurvatureForm::conformal, 2);
  const cvf::T3 g = cvf::christoffel(sph, Vec{0.1, 0.0});
  CHECK(g.at(0, 0, 0) == doctest::Approx(-0.19802).epsilon(1e-5));
  CHECK(g.at(0, 1, 1) == doctest::Approx(+0.19802).epsilon(1e-5));
  CHECK(g.at(1, 0, 1) == doctest::Approx(-0.19802).epsilon(1e-5));

  // Full tensor against the conformal-metric closed form at a generic point.
  const Vec x{0.15, -0.22};
  const double w = 1.0 + cvf::norm_sq(x);
  const Vec dsigma{-4.0 * x[0] / w, -4.0 * x[1] / w};
  const cvf::T3 gx = cvf::christoffel(sph, x);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        CHECK(gx.at(i, j, k) ==
              doctest::Approx(oracle::conformal_gamma(dsigma, i, j, k)).epsilon(1e-10));

  // Projective form: metric derivatives vanish at the origin.
  const MetricField proj = cvf::constant_curvature_metric(-0.6, cvf::CurvatureForm::projective, 3);
  CHECK(cvf::max_abs(cvf::christoffel(proj, Vec{0.0, 0.0, 0.0})) ==
        doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("covariant derivatives of one-forms") {
  const MetricField flat = cvf::euclidean_metric(3);
  const OneFormField cst = cvf::constant_oneform(Vec{0.3, -0.2, 0.5});
  const Vec x{0.1, 0.25, -0.2};
  CHECK(cvf::max_abs(cvf::covariant_d1_oneform(cst, flat, x)) == 0.0);
  CHECK(cvf::max_abs(cvf::covariant_d2_oneform(cst, flat, x)) == 0.0);

  // Parallel p from the navigation pair at mu = lambda = 0: p_i = 4 e_i.
  const auto pair0 = cvf::projective_pair(0.0, 0.0, Vec{0.2, 0.1, 0.0}, 3);
  CHECK(cvf::max_abs(cvf::covariant_d1_oneform(pair0.rho, pair0.h, x)) ==
        doctest::Approx(0.0).epsilon(1e-12));

  // rho of the isotropic-S model: p_{i;j} = (2 tau / sqrt(1-b^2)) a_ij.
  const cvf::RandersModel m = cvf::make_randers_model(1.0, 1.0, Vec{0.0, 0.0, 0.0}, 3);
  const Vec xs{0.12, -0.08, 0.2};
  const cvf::Mat pij = cvf::covariant_d1_oneform(m.rho, m.alpha, xs);
  const auto aij = cvf::metric_value(m.alpha, xs);
  const double fac = 2.0 * cvf::randers_tau(m, xs) / std::sqrt(1.0 - cvf::randers_b2(m, xs));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(pij.at(i, j) == doctest::Approx(fac * aij.at(i, j)).epsilon(1e-9));
}

TEST_CASE("third-order contraction for the isotropic-S model") {
  // Psi = b_{i;j;k} y^i y^j y^k = 2 (tau_0 - 4 tau^2 beta)(alpha^2 - beta^2).
  const cvf::RandersModel m = cvf::make_randers_model(1.0, 1.0, Vec{0.0, 0.0, 0.0}, 3);
  const Vec x{0.1, 0.15, -0.12};
  const Vec y{0.7, -0.4, 0.5};
  const cvf::T3 d2 = cvf::covariant_d2_oneform(m.beta, m.alpha, x);
  double Psi = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) Psi += d2.at(i, j, k) * y[i] * y[j] * y[k];

  const double tau = cvf::randers_tau(m, x);
  const double tau0 = cvf::dot(cvf::scalar_gradient(m.tau_field, x), y);
  const double a2 = cvf::alpha_sq_value(m.alpha, x, y);
  const double be = cvf::beta_value(m.beta, x, y);
  CHECK(Psi == doctest::Approx(2.0 * (tau0 - 4.0 * tau * tau * be) * (a2 - be * be))
                   .epsilon(1e-9));
}

TEST_CASE("riemann tensor of the constant curvature forms") {
  const MetricField flat = cvf::euclidean_metric(2);
  CHECK(cvf::max_abs(cvf::riemann(flat, Vec{0.3, 0.1}).lower) ==
        doctest::Approx(0.0).epsilon(1e-14));

  const double mu = -0.5;
  const MetricField proj = cvf::constant_curvature_metric(mu, cvf::CurvatureForm::projective, 3);
  cvf::Sampler smp(7);
  const Vec x = smp.point_in_ball(proj.domain);
  const cvf::RiemannData R = cvf::riemann(proj, x);
  const auto a = cvf::metric_value(proj, x);

  cvf::T4 expect(3, 0.0);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l)
          expect.at(i, k, j, l) = mu * (a.at(i, j) * a.at(k, l) - a.at(i, l) * a.at(k, j));
  CHECK(frob_diff(R.lower, expect) < 1e-9);

  // Symmetries and the first Bianchi identity.
  double sym = 0.0, bianchi = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          sym = std::max(sym, std::abs(R.lower.at(i, j, k, l) + R.lower.at(j, i, k, l)));
          sym = std::max(sym, std::abs(R.lower.at(i, j, k, l) + R.lower.at(i, j, l, k)));
          sym = std::max(sym, std::abs(R.lower.at(i, j, k, l) - R.lower.at(k, l, i, j)));
          bianchi = std::max(bianchi, std::abs(R.lower.at(i, j, k, l) +
                                               R.lower.at(i, k, l, j) +
                                               R.lower.at(i, l, j, k)));
        }
  CHECK(sym < 1e-10);
  CHECK(bianchi < 1e-10);
}

TEST_CASE("sectional and scalar curvature") {
  const MetricField sph = cvf::constant_curvature_metric(1.0, cvf::CurvatureForm::conformal, 3);
  cvf::Sampler smp(11);
  for (int rep = 0; rep < 5; ++rep) {
    const Vec x = smp.point_in_ball(sph.domain);
    const Vec u = smp.unit_sphere(3);
    const Vec v = smp.unit_sphere(3);
    CHECK(cvf::sectional_curvature(sph, x, u, v) == doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK(cvf::scalar_curvature(sph, Vec{0.1, -0.2, 0.05}) == doctest::Approx(6.0).epsilon(1e-9));

  const MetricField hyp = cvf::constant_curvature_metric(-0.5, cvf::CurvatureForm::projective, 3);
  CHECK(cvf::sectional_curvature(hyp, Vec{0.2, 0.1, 0.0}, Vec{1.0, 0.0, 0.0},
                                 Vec{0.0, 0.5, 0.5}) == doctest::Approx(-0.5).epsilon(1e-9));

  // Degenerate plane.
  CHECK_THROWS_AS(cvf::sectional_curvature(hyp, Vec{0.1, 0.0, 0.0}, Vec{1.0, 0.0, 0.0},
                                           Vec{2.0, 0.0, 0.0}),
                  cvf::EvalError);
}

TEST_CASE("ricci identity for one-forms") {
  // b_{i;j;k} - b_{i;k;j} = -R^m_{ikj} b_m on a curved metric.
  const MetricField sph = cvf::constant_curvature_metric(0.8, cvf::CurvatureForm::projective, 3);
  const auto pair = cvf::projective_pair(0.4, 0.8, Vec{0.1, -0.2, 0.3}, 3);
  const OneFormField b = pair.rho;  // generic non-parallel form
  const Vec x{0.15, 0.1, -0.2};
  const cvf::T3 d2 = cvf::covariant_d2_oneform(b, sph, x);
  const cvf::RiemannData R = cvf::riemann(sph, x);
  const Vec bv = cvf::oneform_value(b, x);
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        double comm = d2.at(i, j, k) - d2.at(i, k, j);
        for (int m = 0; m < 3; ++m) comm += R.mixed.at(m, i, k, j) * bv[m];
        r = std::max(r, std::abs(comm));
      }
  CHECK(r < 1e-9);
}

TEST_CASE("gradient norm and scalar hessian") {
  const MetricField flat = cvf::euclidean_metric(3);
  const Vec d{0.3, -0.4, 1.2};
  const cvf::ScalarField lin{3, [d](const JetVec& x) {
                               cvf::Jet3 s = cvf::Jet3::constant(x[0].dim(), x[0].order(), 0.0);
                               for (int i = 0; i < 3; ++i) s += x[i] * d[i];
                               return s;
                             }};
  const Vec x{0.2, 0.1, -0.1};
  CHECK(cvf::grad_norm_sq(lin, flat, x) == doctest::Approx(cvf::norm_sq(d)));
  CHECK(cvf::grad_norm_sq(cvf::constant_scalar(3, 2.5), flat, x) == 0.0);
  CHECK(cvf::hessian_scalar(lin, flat, x).max_abs() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("closedness residual") {
  // Gradient forms are closed.
  const OneFormField grad{2, [](const JetVec& x) {
                            const cvf::Jet3 e = cvf::exp(x[0] * x[1]);
                            return JetVec{x[1] * e, x[0] * e};
                          }};
  CHECK(cvf::closedness_residual(grad, Vec{0.3, -0.2}) < 1e-11);

  cvf::Sampler smp(3);
  const auto pair = cvf::projective_pair(0.7, 1.0, Vec{0.2, 0.0, 0.1}, 3);
  for (int rep = 0; rep < 5; ++rep)
    CHECK(cvf::closedness_residual(pair.rho, smp.point_in_ball(pair.h.domain)) < 1e-10);

  const OneFormField rot{2, [](const JetVec& x) { return JetVec{-x[1], x[0]}; }};
  CHECK(cvf::closedness_residual(rot, Vec{0.4, 0.1}) == doctest::Approx(2.0));
}

TEST_CASE("metric compatibility of the connection") {
  cvf::Sampler smp(5);
  const MetricField metrics[] = {
      cvf::constant_curvature_metric(1.0, cvf::CurvatureForm::projective, 3),
      cvf::constant_curvature_metric(-0.8, cvf::CurvatureForm::conformal, 3),
      cvf::euclidean_metric(3)};
  for (const MetricField& a : metrics)
    for (int rep = 0; rep < 3; ++rep)
      CHECK(cvf::metric_compat_residual(a, smp.point_in_ball(a.domain)) < 1e-11);
}
