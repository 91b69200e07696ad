#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cvf/checker.hpp"
#include "cvf/geometry.hpp"
#include "cvf/linalg.hpp"
#include "cvf/sampling.hpp"

using cvf::Jet3;
using cvf::JetVec;
using cvf::Vec;

namespace {

cvf::PhaseFunction alpha_sq_phase(const cvf::MetricField& a) {
  return {a.dim, [a](const JetVec& x, const JetVec& y) {
            const cvf::JetMat m = a.eval(x);
            Jet3 s = Jet3::constant(x[0].dim(), x[0].order(), 0.0);
            for (int i = 0; i < m.n; ++i)
              for (int j = 0; j < m.n; ++j) s += m.at(i, j) * y[i] * y[j];
            return s;
          }};
}

cvf::PhaseFunction beta_phase(const cvf::OneFormField& b) {
  return {b.dim, [b](const JetVec& x, const JetVec& y) {
            const JetVec bv = b.eval(x);
            Jet3 s = Jet3::constant(x[0].dim(), x[0].order(), 0.0);
            for (std::size_t i = 0; i < bv.size(); ++i) s += bv[i] * y[i];
            return s;
          }};
}

cvf::PhaseFunction b_sq_phase(const cvf::MetricField& a, const cvf::OneFormField& b) {
  return {a.dim, [a, b](const JetVec& x, const JetVec&) {
            const cvf::JetMat inv = cvf::invert_jet_matrix(a.eval(x));
            const JetVec bv = b.eval(x);
            Jet3 s = Jet3::constant(x[0].dim(), x[0].order(), 0.0);
            for (int i = 0; i < inv.n; ++i)
              for (int j = 0; j < inv.n; ++j) s += inv.at(i, j) * bv[i] * bv[j];
            return s;
          }};
}

}  // namespace

TEST_CASE("xv_apply reproduces the covariant contractions") {
  const auto pair = cvf::projective_pair(0.4, 1.0, Vec{0.2, -0.1, 0.15}, 3);
  const cvf::MetricField& a = pair.h;
  const cvf::OneFormField& b = pair.rho;
  const cvf::VectorField v{3, [](const JetVec& x) {
                             return JetVec{x[1] * x[2], x[0] * x[0] - x[2],
                                           x[0] + x[1] * x[2]};
                           }};
  const Vec x{0.12, -0.2, 0.08};
  const Vec y{0.7, 0.3, -0.5};

  const cvf::Mat vij = cvf::covariant_d1_vector_lower(v, a, x);
  const cvf::Mat bij = cvf::covariant_d1_oneform(b, a, x);
  const Vec vv = cvf::vector_value(v, x);
  const Vec bv = cvf::oneform_value(b, x);
  const Vec braised = cvf::spd_inverse(cvf::metric_value(a, x)).mul(bv);

  double v00 = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v00 += vij.at(i, j) * y[i] * y[j];
  CHECK(cvf::xv_apply(v, alpha_sq_phase(a), x, y) ==
        doctest::Approx(2.0 * v00).epsilon(1e-10));

  double xb = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      xb += (vv[j] * bij.at(i, j) + braised[j] * vij.at(j, i)) * y[i];
  CHECK(cvf::xv_apply(v, beta_phase(b), x, y) == doctest::Approx(xb).epsilon(1e-10));

  double xb2 = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) xb2 += 2.0 * vv[j] * braised[i] * bij.at(i, j);
  CHECK(cvf::xv_apply(v, b_sq_phase(a, b), x, y) == doctest::Approx(xb2).epsilon(1e-10));
}

TEST_CASE("homothety of a flat model passes every check") {
  const int n = 3;
  const cvf::MetricField a = cvf::euclidean_metric(n);
  const double s = std::sqrt(1.0 + 0.25);
  const cvf::OneFormField b = cvf::constant_oneform(Vec{0.5 / s, 0.0, 0.0});

  cvf::ModelParams p;
  p.tau = 0.15;
  p.gamma = Vec{0.05, -0.1, 0.2};
  const auto vc = cvf::conformal_field("thm2_i", p, n);

  const auto rep = cvf::check_ab_system(a, b, vc.V, vc.c, 60, 17, 1e-9);
  CHECK(rep.pass());
  CHECK(rep.matrix.max_residual < 1e-12);
  CHECK(rep.vector.max_residual < 1e-12);
  CHECK(rep.matrix.samples == 60);

  CHECK(cvf::check_conformal_riemann(a, vc.V, vc.c, 40, 3, 1e-9).pass);

  const cvf::FinslerMetric f =
      cvf::ab_metric(a, b, cvf::phi_randers());
  CHECK(cvf::check_conformal_finsler(f, vc.V, vc.c, 40, 3, 1e-9).pass);

  const cvf::PhiFunction quad = cvf::phi_quadratic(2.0, 1.0);
  cvf::Sampler smp(23);
  for (int rep2 = 0; rep2 < 10; ++rep2) {
    const Vec x = smp.point_in_ball(a.domain);
    const Vec y = smp.unit_sphere(n);
    CHECK(cvf::kang_residual(a, b, quad, vc.V, vc.c, x, y) < 1e-12);
  }

  // A non-conformal perturbation must fail the matrix stream.
  const cvf::VectorField bad{n, [](const JetVec& x) {
                               return JetVec{x[0] * x[1], x[1], x[2]};
                             }};
  CHECK_FALSE(cvf::check_ab_system(a, b, bad, vc.c, 60, 17, 1e-9).pass());
}

TEST_CASE("series coefficients in the adapted frame") {
  cvf::AdaptedFrameData fr;
  fr.b = 0.5;
  fr.V10 = 2.0;
  fr.V01 = 3.0;
  fr.Vb0 = 1.0;
  const Vec randers{1.0, 1.0, 0.0, 0.0};

  const Vec pa = cvf::series_coefficients(cvf::SeriesBranch::A, randers, fr);
  REQUIRE(pa.size() == randers.size());
  CHECK(pa[0] == doctest::Approx(-1.0));
  CHECK(pa[1] == doctest::Approx(-5.0));
  CHECK(pa[2] == doctest::Approx(0.0));
  CHECK(pa[3] == doctest::Approx(0.0));

  // Homothety-compatible frame: -2c = V11 kills the k=1 term.
  cvf::AdaptedFrameData fb;
  fb.b = 0.5;
  fb.c = 0.25;
  fb.V11 = -0.5;
  fb.Vb1 = 0.0;
  const Vec pb = cvf::series_coefficients(cvf::SeriesBranch::B, randers, fb);
  for (double pk : pb) CHECK(pk == doctest::Approx(0.0));

  fb.V11 = 0.3;
  fb.Vb1 = 0.1;
  const Vec pb2 = cvf::series_coefficients(cvf::SeriesBranch::B, randers, fb);
  CHECK(pb2[0] == doctest::Approx(0.25));
  CHECK(pb2[1] == doctest::Approx(0.8));
  CHECK(pb2[2] == doctest::Approx(0.0));
}

TEST_CASE("conformal invariant and closed-form hessian") {
  const int n = 3;
  const double mu = 1.0;
  const cvf::MetricField a = cvf::constant_curvature_metric(mu, cvf::CurvatureForm::projective, n);
  cvf::ModelParams p;
  p.lambda = 0.8;
  p.mu = mu;
  p.e = Vec{0.2, -0.3, 0.1};
  const auto vc = cvf::conformal_field("closed_i", p, n);

  CHECK(cvf::c_invariant_report(vc.c, mu, a, 80, 29, 1e-8).pass);
  CHECK(cvf::closed_conformal_residual(vc.c, mu, a, 40, 29, 1e-9).pass);

  // A non-invariant scalar must fail.
  const cvf::ScalarField lin{n, [](const JetVec& x) { return x[0] * x[0]; }};
  CHECK_FALSE(cvf::c_invariant_report(lin, mu, a, 80, 29, 1e-8).pass);
}

TEST_CASE("finite flow law") {
  const int n = 2;
  const cvf::MetricField a = cvf::euclidean_metric(n);
  const cvf::FinslerMetric f =
      cvf::ab_metric(a, cvf::constant_oneform(Vec{0.5, 0.0}),
                     cvf::phi_randers());

  // Homothety V = -2c x with c = 0.1: F scales by e^{-0.2 t}.
  const double c = 0.1;
  const cvf::VectorField hom{n, [c](const JetVec& x) {
                               return JetVec{x[0] * (-2.0 * c), x[1] * (-2.0 * c)};
                             }};
  const Vec x{0.3, -0.1};
  const Vec y{0.8, 0.6};
  const auto res = cvf::flow_check(f, hom, c, x, y, Vec{0.0, 0.5, 1.0});
  CHECK(res.max_deviation < 1e-6);
  CHECK_FALSE(res.truncated);
  REQUIRE(res.deviations.size() == 3);
  CHECK(res.deviations[0] == doctest::Approx(0.0).epsilon(1e-12));

  // Rotation is a Killing field of F = |y|: the law holds with c = 0.
  const cvf::FinslerMetric round =
      cvf::ab_metric(a, cvf::zero_oneform(n), cvf::phi_randers());
  const cvf::VectorField rot{n, [](const JetVec& x) {
                               return JetVec{-x[1], x[0]};
                             }};
  const auto res2 = cvf::flow_check(round, rot, 0.0, x, y, Vec{0.0, 0.7, 1.4});
  CHECK(res2.max_deviation < 1e-8);

  // The rotation is not homothetic for nonzero claimed c.
  const auto res3 = cvf::flow_check(round, rot, 0.05, x, y, Vec{0.0, 1.0});
  CHECK(res3.max_deviation > 1e-2);
}
