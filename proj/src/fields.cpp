#include "cvf/fields.hpp"

#include <cmath>

namespace cvf {

bool Domain::contains(std::span<const double> x) const {
  double r2 = 0.0;
  for (int i = 0; i < dim; ++i) {
    const double d = x[i] - center[i];
    r2 += d * d;
  }
  if (r2 > radius * radius) return false;
  double x2 = 0.0;
  for (int i = 0; i < dim; ++i) x2 += x[i] * x[i];
  return 1.0 + mu * x2 >= 0.25;
}

Jet3 eval_scalar(const ScalarField& f, std::span<const double> x, int order) {
  return f.eval(seed_point(x, order));
}

JetVec eval_oneform(const OneFormField& f, std::span<const double> x, int order) {
  return f.eval(seed_point(x, order));
}

JetVec eval_vector(const VectorField& f, std::span<const double> x, int order) {
  return f.eval(seed_point(x, order));
}

JetMat eval_metric(const MetricField& a, std::span<const double> x, int order) {
  return a.eval(seed_point(x, order));
}

double scalar_value(const ScalarField& f, std::span<const double> x) {
  return eval_scalar(f, x, 0).value();
}

Vec oneform_value(const OneFormField& f, std::span<const double> x) {
  const JetVec b = eval_oneform(f, x, 0);
  Vec r(f.dim);
  for (int i = 0; i < f.dim; ++i) r[i] = b[i].value();
  return r;
}

Vec vector_value(const VectorField& f, std::span<const double> x) {
  const JetVec v = eval_vector(f, x, 0);
  Vec r(f.dim);
  for (int i = 0; i < f.dim; ++i) r[i] = v[i].value();
  return r;
}

SymMatrix metric_value(const MetricField& a, std::span<const double> x) {
  const JetMat m = eval_metric(a, x, 0);
  SymMatrix s(a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = i; j < a.dim; ++j) s.set(i, j, m.at(i, j).value());
  return s;
}

Mat vector_jacobian(const VectorField& v, std::span<const double> x) {
  const JetVec j = eval_vector(v, x, 1);
  Mat r(v.dim, 0.0);
  for (int i = 0; i < v.dim; ++i)
    for (int k = 0; k < v.dim; ++k) r.at(i, k) = j[i].grad(k);
  return r;
}

Vec scalar_gradient(const ScalarField& f, std::span<const double> x) {
  const Jet3 j = eval_scalar(f, x, 1);
  Vec g(f.dim);
  for (int i = 0; i < f.dim; ++i) g[i] = j.grad(i);
  return g;
}

double alpha_sq_value(const MetricField& a, std::span<const double> x,
                      std::span<const double> y) {
  return metric_value(a, x).quad(y);
}

double beta_value(const OneFormField& b, std::span<const double> x,
                  std::span<const double> y) {
  return dot(oneform_value(b, x), y);
}

ScalarField constant_scalar(int dim, double value) {
  return {dim, [value](const JetVec& x) {
            return Jet3::constant(x[0].dim(), x[0].order(), value);
          }};
}

VectorField zero_vector(int dim) {
  return {dim, [dim](const JetVec& x) {
            return JetVec(dim, Jet3::constant(x[0].dim(), x[0].order(), 0.0));
          }};
}

OneFormField zero_oneform(int dim) {
  return {dim, [dim](const JetVec& x) {
            return JetVec(dim, Jet3::constant(x[0].dim(), x[0].order(), 0.0));
          }};
}

OneFormField constant_oneform(Vec coeffs) {
  const int dim = static_cast<int>(coeffs.size());
  return {dim, [dim, coeffs](const JetVec& x) {
            JetVec b;
            b.reserve(dim);
            for (int i = 0; i < dim; ++i)
              b.push_back(Jet3::constant(x[0].dim(), x[0].order(), coeffs[i]));
            return b;
          }};
}

MetricField euclidean_metric(int dim) {
  return {dim, Domain::ball(dim), [dim](const JetVec& x) {
            JetMat m(dim, Jet3::constant(x[0].dim(), x[0].order(), 0.0));
            for (int i = 0; i < dim; ++i)
              m.at(i, i) = Jet3::constant(x[0].dim(), x[0].order(), 1.0);
            return m;
          }};
}

OneFormField lower_index(const MetricField& a, const VectorField& v) {
  const int n = a.dim;
  auto ae = a.eval;
  auto ve = v.eval;
  return {n, [n, ae, ve](const JetVec& x) {
            const JetMat m = ae(x);
            const JetVec vv = ve(x);
            JetVec w(n, Jet3::constant(x[0].dim(), x[0].order(), 0.0));
            for (int i = 0; i < n; ++i)
              for (int j = 0; j < n; ++j) w[i] += m.at(i, j) * vv[j];
            return w;
          }};
}

}  // namespace cvf
