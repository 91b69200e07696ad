#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cvf/deformation.hpp"
#include "cvf/randers.hpp"
#include "cvf/sampling.hpp"

using cvf::JetVec;
using cvf::Vec;

TEST_CASE("closed form triple") {
  // (k1,k2,k3) = (2,0,-3): D = 1-t, 2chi = 3 ln(1-t) gives
  // u = (1-t)^3, v = -(1-t)^3, w = (1-t)^2.
  const auto uvw = cvf::uvw_closed_form(2.0, 0.0, -3.0, 0.36);
  CHECK(uvw[0] == doctest::Approx(std::pow(0.64, 3)).epsilon(1e-10));
  CHECK(uvw[1] == doctest::Approx(-uvw[0]).epsilon(1e-10));
  CHECK(uvw[2] == doctest::Approx(0.64 * 0.64).epsilon(1e-10));

  const auto at0 = cvf::uvw_closed_form(1.5, -0.4, 0.7, 0.0);
  CHECK(at0[0] == doctest::Approx(1.0));
  CHECK(at0[1] == doctest::Approx(1.5 + 0.7));
  CHECK(at0[2] == doctest::Approx(1.0));

  // k2 = k3 = 0: D = 1 + k1 t, chi = 0, so (1, k1, sqrt(1+k1 t)).
  const auto lin = cvf::uvw_closed_form(0.8, 0.0, 0.0, 0.5);
  CHECK(lin[0] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(lin[1] == doctest::Approx(0.8).epsilon(1e-10));
  CHECK(lin[2] == doctest::Approx(std::sqrt(1.4)).epsilon(1e-10));

  // D root inside the interval is refused.
  CHECK_THROWS_AS(cvf::uvw_closed_form(2.0, 0.0, -3.0, 1.2), cvf::EvalError);
}

TEST_CASE("ode solution matches the closed form") {
  cvf::Sampler smp(31);
  int tried = 0;
  for (int rep = 0; rep < 14 && tried < 10; ++rep) {
    const double k1 = smp.uniform(-1.0, 1.0);
    const double k2 = smp.uniform(-1.0, 1.0);
    const double k3 = smp.uniform(-1.0, 1.0);
    if (std::abs(k2 - k1 * k3) < 0.05) continue;
    // Keep D positive on [0, 0.648].
    if (1.0 + (k1 + k3) * 0.648 + k2 * 0.648 * 0.648 < 0.1) continue;
    ++tried;
    double worst = 0.0;
    for (int g = 0; g <= 100; ++g) {
      const double t = 0.648 * g / 100.0;
      const auto cf = cvf::uvw_closed_form(k1, k2, k3, t);
      const auto od = cvf::uvw_ode_solve(k1, k2, k3, {1.0, k1 + k3, 1.0}, t);
      for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(cf[i] - od[i]));
    }
    CHECK(worst < 1e-8);
  }
  CHECK(tried == 10);
}

TEST_CASE("triple values and jets") {
  const cvf::UVWTriple nav = cvf::navigation_triple();
  const auto nv = cvf::triple_values(nav, 0.25);
  CHECK(nv[0] == doctest::Approx(0.75));
  CHECK(nv[1] == doctest::Approx(-0.75));
  CHECK(nv[2] == doctest::Approx(-0.75));

  const cvf::UVWTriple rp = cvf::randers_projective_triple();
  const auto rv = cvf::triple_values(rp, 0.75);
  CHECK(rv[0] == doctest::Approx(1.0));
  CHECK(rv[1] == doctest::Approx(0.0));
  CHECK(rv[2] == doctest::Approx(2.0));

  // Jets of the closed-form triple agree with centered differences.
  const cvf::UVWTriple cf = cvf::uvw_closed_form_triple(0.5, -0.3, 0.2);
  const double t0 = 0.3, h = 1e-4;
  cvf::Jet3 tj = cvf::Jet3::variable(1, 2, t0, 0);
  const auto jets = cvf::triple_jets(cf, tj);
  for (int i = 0; i < 3; ++i) {
    const double up = cvf::triple_values(cf, t0 + h)[i];
    const double dn = cvf::triple_values(cf, t0 - h)[i];
    const double mid = cvf::triple_values(cf, t0)[i];
    CHECK(jets[i].value() == doctest::Approx(mid).epsilon(1e-12));
    CHECK(jets[i].grad(0) == doctest::Approx((up - dn) / (2 * h)).epsilon(1e-6));
    CHECK(jets[i].hess(0, 0) == doctest::Approx((up - 2 * mid + dn) / (h * h)).epsilon(1e-4));
  }
}

TEST_CASE("b2 from p2") {
  CHECK(cvf::randers_b2_from_p2(0.0) == doctest::Approx(0.0));
  CHECK(cvf::randers_b2_from_p2(1.0) == doctest::Approx(0.5));
  CHECK(cvf::randers_b2_from_p2(3.0) == doctest::Approx(0.75));
}

TEST_CASE("pointwise deformation values") {
  const int n = 3;
  const cvf::MetricField a = cvf::euclidean_metric(n);
  const cvf::OneFormField b = cvf::constant_oneform(Vec{0.5, 0.0, 0.0});  // b^2 = 0.25
  const Vec x{0.1, -0.2, 0.3};
  const Vec y{0.6, 0.8, 0.0};
  const double a2 = cvf::norm_sq(y);
  const double be = 0.5 * y[0];

  const auto nav = cvf::deform(a, b, cvf::navigation_triple(), x, y);
  CHECK(nav.b2 == doctest::Approx(0.25));
  CHECK(nav.h2 == doctest::Approx(0.75 * a2 - 0.75 * be * be));
  CHECK(nav.rho == doctest::Approx(-0.75 * be));

  const cvf::OneFormField big = cvf::constant_oneform(Vec{std::sqrt(0.75), 0.0, 0.0});
  const auto rp = cvf::deform(a, big, cvf::randers_projective_triple(), x, y);
  CHECK(rp.b2 == doctest::Approx(0.75));
  CHECK(rp.rho == doctest::Approx(2.0 * std::sqrt(0.75) * y[0]));  // w = 1/sqrt(1-t) = 2
}

TEST_CASE("deformed fields as jet fields") {
  // On the isotropic-S model the randers_projective deformation of
  // (alpha, beta) returns exactly rho: p_i = b_i / sqrt(1 - b^2).
  const cvf::RandersModel m = cvf::make_randers_model(0.7, 1.0, Vec{0.15, -0.1, 0.0}, 3);
  const cvf::OneFormField back =
      cvf::deformed_oneform(m.alpha, m.beta, cvf::randers_projective_triple());
  cvf::Sampler smp(13);
  for (int rep = 0; rep < 8; ++rep) {
    const Vec x = smp.point_in_ball(m.alpha.domain);
    const Vec got = cvf::oneform_value(back, x);
    const Vec want = cvf::oneform_value(m.rho, x);
    for (int i = 0; i < 3; ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-10));
  }

  // deformed_metric at the navigation triple reproduces the pointwise h^2.
  const cvf::MetricField h =
      cvf::deformed_metric(m.alpha, m.beta, cvf::navigation_triple());
  const Vec x{0.1, 0.12, -0.05};
  const Vec y{0.4, -0.2, 0.9};
  const auto d = cvf::deform(m.alpha, m.beta, cvf::navigation_triple(), x, y);
  CHECK(cvf::alpha_sq_value(h, x, y) == doctest::Approx(d.h2).epsilon(1e-12));
}

TEST_CASE("xv of the length function vanishes for conformal pairs") {
  // thm2_ii with the pair (h, rho): X_V(b^2) = 0 since c = 0 preserves b^2.
  const int n = 3;
  const auto pair = cvf::projective_pair(0.3, 1.0, Vec{0.2, 0.0, 0.0}, n);
  cvf::ModelParams p;
  p.lambda = 0.3;
  p.mu = 1.0;
  p.e = Vec{0.2, 0.0, 0.0};
  p.gamma = Vec{0.0, 0.1, 0.0};
  p.Q = cvf::Mat(3, 0.0);
  p.Q.at(0, 1) = 0.3;
  p.Q.at(1, 0) = -0.3;
  const auto vc = cvf::conformal_field("thm2_ii", p, n);
  cvf::Sampler smp(41);
  for (int rep = 0; rep < 6; ++rep) {
    const Vec x = smp.point_in_ball(pair.h.domain);
    CHECK(std::abs(cvf::xv_b2(pair.h, pair.rho, vc.V, x)) < 1e-9);
  }
}

TEST_CASE("lemma41 paired reports") {
  const int n = 3;
  const auto pair = cvf::projective_pair(0.3, 1.0, Vec{0.2, 0.0, 0.0}, n);
  cvf::ModelParams p;
  p.lambda = 0.3;
  p.mu = 1.0;
  p.e = Vec{0.2, 0.0, 0.0};
  p.gamma = Vec{0.0, 0.1, 0.0};
  p.Q = cvf::Mat(3, 0.0);
  p.Q.at(0, 1) = 0.3;
  p.Q.at(1, 0) = -0.3;
  const auto vc = cvf::conformal_field("thm2_ii", p, n);

  for (const auto& triple :
       {cvf::navigation_triple(), cvf::randers_projective_triple()}) {
    const auto rep = cvf::check_lemma41(pair.h, pair.rho, vc.V, vc.c, triple, 40, 7,
                                        1e-9, 1e-8);
    CHECK(rep.base.pass);
    CHECK(rep.deformed.pass);
  }

  // Perturbing the field breaks base and deformed system together.
  const cvf::VectorField bad{n, [](const JetVec& x) {
                               return JetVec{x[0] * x[0], x[1], x[2] * x[0]};
                             }};
  const auto repb = cvf::check_lemma41(pair.h, pair.rho, bad, vc.c,
                                       cvf::navigation_triple(), 40, 7, 1e-9, 1e-8);
  CHECK_FALSE(repb.base.pass);
  CHECK_FALSE(repb.deformed.pass);
}
