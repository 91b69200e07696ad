#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "cvf/fields.hpp"
#include "oracles.hpp"

using cvf::Domain;
using cvf::Jet3;
using cvf::JetVec;
using cvf::MetricField;
using cvf::OneFormField;
using cvf::ScalarField;
using cvf::Vec;
using cvf::VectorField;

namespace {

ScalarField sample_scalar() {
  return {2, [](const JetVec& x) {
            return cvf::exp(x[0] * x[1]) * cvf::sqrt(1.0 + cvf::norm_sq(x));
          }};
}

double sample_scalar_plain(std::span<const double> x) {
  return std::exp(x[0] * x[1]) * std::sqrt(1 + x[0] * x[0] + x[1] * x[1]);
}

}  // namespace

TEST_CASE("domain membership") {
  const Domain d = Domain::ball(3, 0.5);
  CHECK(d.contains(Vec{0.1, 0.2, -0.3}));
  CHECK_FALSE(d.contains(Vec{0.6, 0.0, 0.0}));

  // Negative-curvature chart guard: 1 + mu|x|^2 >= 0.25.
  const Domain g = Domain::ball(2, 0.9, -1.0);
  CHECK(g.contains(Vec{0.5, 0.0}));
  CHECK_FALSE(g.contains(Vec{0.88, 0.0}));  // 1 - 0.7744 < 0.25
}

TEST_CASE("scalar evaluation and gradient against finite differences") {
  const ScalarField f = sample_scalar();
  const Vec x{0.3, -0.2};
  CHECK(cvf::scalar_value(f, x) == doctest::Approx(sample_scalar_plain(x)));

  const Vec g = cvf::scalar_gradient(f, x);
  const Vec g_fd = oracle::fd_grad(sample_scalar_plain, x);
  for (int i = 0; i < 2; ++i) CHECK(g[i] == doctest::Approx(g_fd[i]).epsilon(1e-7));

  const Jet3 j2 = cvf::eval_scalar(f, x, 2);
  CHECK(j2.order() == 2);
  CHECK(j2.hess(0, 1) == j2.hess(1, 0));
}

TEST_CASE("euclidean metric and line elements") {
  const MetricField a = cvf::euclidean_metric(3);
  const Vec x{0.1, 0.2, 0.3}, y{1.0, -2.0, 2.0};
  const cvf::SymMatrix m = cvf::metric_value(a, x);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(m.at(i, j) == (i == j ? 1.0 : 0.0));
  CHECK(cvf::alpha_sq_value(a, x, y) == doctest::Approx(9.0));

  const OneFormField b = cvf::constant_oneform(Vec{0.5, 0.0, -1.0});
  CHECK(cvf::beta_value(b, x, y) == doctest::Approx(0.5 - 2.0));
}

TEST_CASE("constant fields adopt the ambient jet space") {
  // Evaluate dim-2 constants inside a dim-6 order-2 jet space; the
  // output must live in the caller's space, not the field's.
  const auto seeds = cvf::seed_constants(Vec{0.1, 0.2}, 6, 2);
  const ScalarField c = cvf::constant_scalar(2, 3.5);
  const Jet3 v = c.eval(seeds);
  CHECK(v.dim() == 6);
  CHECK(v.order() == 2);
  CHECK(v.value() == 3.5);

  const JetVec z = cvf::zero_vector(2).eval(seeds);
  CHECK(z.size() == 2);
  CHECK(z[0].dim() == 6);
  CHECK(z[0].value() == 0.0);
}

TEST_CASE("vector jacobian against finite differences") {
  const VectorField v{2, [](const JetVec& x) {
                        return JetVec{x[0] * x[0] + x[1], cvf::exp(x[1]) * x[0]};
                      }};
  const Vec x{0.4, -0.1};
  const cvf::Mat J = cvf::vector_jacobian(v, x);
  CHECK(J.at(0, 0) == doctest::Approx(2 * x[0]));
  CHECK(J.at(0, 1) == doctest::Approx(1.0));
  CHECK(J.at(1, 0) == doctest::Approx(std::exp(x[1])));
  CHECK(J.at(1, 1) == doctest::Approx(x[0] * std::exp(x[1])));
}

TEST_CASE("lower_index composes through the metric") {
  // a_ij = (1 + |x|^2) d_ij, V = (1, x0) -> V_i = (1+|x|^2)(1, x0).
  const MetricField a{2, Domain::ball(2),
                      [](const JetVec& x) {
                        const Jet3 f = 1.0 + cvf::norm_sq(x);
                        cvf::JetMat m(2, Jet3::constant(x[0].dim(), x[0].order(), 0.0));
                        m.at(0, 0) = f;
                        m.at(1, 1) = f;
                        return m;
                      }};
  const VectorField v{2, [](const JetVec& x) {
                        return JetVec{Jet3::constant(x[0].dim(), x[0].order(), 1.0),
                                      x[0]};
                      }};
  const OneFormField low = cvf::lower_index(a, v);
  const Vec x{0.3, 0.4};
  const Vec val = cvf::oneform_value(low, x);
  const double f = 1.25;
  CHECK(val[0] == doctest::Approx(f));
  CHECK(val[1] == doctest::Approx(f * 0.3));

  // The composition stays jet-evaluable: gradient of the first component
  // is d/dx of (1+|x|^2), i.e. 2x.
  const JetVec jets = cvf::eval_oneform(low, x, 1);
  CHECK(jets[0].grad(0) == doctest::Approx(0.6));
  CHECK(jets[0].grad(1) == doctest::Approx(0.8));
}
