#include "cvf/geometry.hpp"

#include <cmath>

namespace cvf {

JetT3 christoffel_jets(const MetricField& a, std::span<const double> x, int order) {
  const int n = a.dim;
  const JetVec seeds = seed_point(x, order + 1);
  const JetMat aj = a.eval(seeds);
  const JetMat ainv = invert_jet_matrix(aj);

  // d_k a_ij, one order lower than aj
  JetT3 da(n, Jet3::constant(n, order, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) da.at(i, j, k) = derivative(aj.at(i, j), k);

  JetT3 gamma(n, Jet3::constant(n, order, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j; k < n; ++k) {
        Jet3 s = Jet3::constant(n, order, 0.0);
        for (int l = 0; l < n; ++l)
          s += ainv.at(i, l) * (da.at(l, k, j) + da.at(l, j, k) - da.at(j, k, l));
        s *= 0.5;
        gamma.at(i, j, k) = s;
        gamma.at(i, k, j) = s;
      }
  return gamma;
}

T3 christoffel(const MetricField& a, std::span<const double> x) {
  const JetT3 g = christoffel_jets(a, x, 0);
  const int n = a.dim;
  T3 r(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) r.at(i, j, k) = g.at(i, j, k).value();
  return r;
}

Mat covariant_d1_oneform(const OneFormField& b, const MetricField& a,
                         std::span<const double> x) {
  const int n = a.dim;
  const JetVec bj = b.eval(seed_point(x, 1));
  const T3 g = christoffel(a, x);
  Mat r(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = bj[i].grad(j);
      for (int k = 0; k < n; ++k) s -= g.at(k, i, j) * bj[k].value();
      r.at(i, j) = s;
    }
  return r;
}

T3 covariant_d2_oneform(const OneFormField& b, const MetricField& a,
                        std::span<const double> x) {
  const int n = a.dim;
  const JetVec bj = b.eval(seed_point(x, 2));
  const JetT3 g = christoffel_jets(a, x, 1);

  // b_{i;j} as jets of order 1
  Grid2<Jet3> cd1(n, Jet3::constant(n, 1, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Jet3 s = derivative(bj[i], j);
      for (int k = 0; k < n; ++k) s -= g.at(k, i, j) * bj[k];
      cd1.at(i, j) = s;
    }

  T3 r(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double s = derivative(cd1.at(i, j), k).value();
        for (int m = 0; m < n; ++m) {
          s -= g.at(m, i, k).value() * cd1.at(m, j).value();
          s -= g.at(m, j, k).value() * cd1.at(i, m).value();
        }
        r.at(i, j, k) = s;
      }
  return r;
}

Mat covariant_d1_vector_lower(const VectorField& v, const MetricField& a,
                              std::span<const double> x) {
  return covariant_d1_oneform(lower_index(a, v), a, x);
}

RiemannData riemann(const MetricField& a, std::span<const double> x) {
  const int n = a.dim;
  const JetT3 g = christoffel_jets(a, x, 1);
  const SymMatrix av = metric_value(a, x);

  RiemannData r{T4(n, 0.0), T4(n, 0.0)};
  for (int m = 0; m < n; ++m)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double s = derivative(g.at(m, l, j), k).value() -
                     derivative(g.at(m, k, j), l).value();
          for (int p = 0; p < n; ++p)
            s += g.at(m, k, p).value() * g.at(p, l, j).value() -
                 g.at(m, l, p).value() * g.at(p, k, j).value();
          r.mixed.at(m, j, k, l) = s;
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double s = 0.0;
          for (int m = 0; m < n; ++m) s += av.at(i, m) * r.mixed.at(m, j, k, l);
          r.lower.at(i, j, k, l) = s;
        }
  return r;
}

double sectional_curvature(const MetricField& a, std::span<const double> x,
                           std::span<const double> u, std::span<const double> v) {
  const int n = a.dim;
  const RiemannData r = riemann(a, x);
  const SymMatrix av = metric_value(a, x);
  double num = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          num += r.lower.at(i, j, k, l) * u[i] * v[j] * u[k] * v[l];
  const double uu = av.quad(u), vv = av.quad(v), uv = av.bilin(u, v);
  const double den = uu * vv - uv * uv;
  if (den <= 0.0)
    throw EvalError("sectional_curvature: degenerate 2-plane (area^2 = " +
                    std::to_string(den) + ")");
  return num / den;
}

double scalar_curvature(const MetricField& a, std::span<const double> x) {
  const int n = a.dim;
  const RiemannData r = riemann(a, x);
  const SymMatrix inv = spd_inverse(metric_value(a, x));
  double s = 0.0;
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) {
      double ric = 0.0;
      for (int m = 0; m < n; ++m) ric += r.mixed.at(m, j, m, l);
      s += inv.at(j, l) * ric;
    }
  return s;
}

double grad_norm_sq(const ScalarField& c, const MetricField& a,
                    std::span<const double> x) {
  const Vec g = scalar_gradient(c, x);
  return spd_inverse(metric_value(a, x)).quad(g);
}

SymMatrix hessian_scalar(const ScalarField& c, const MetricField& a,
                         std::span<const double> x) {
  const int n = a.dim;
  const Jet3 cj = eval_scalar(c, x, 2);
  const T3 g = christoffel(a, x);
  SymMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double s = cj.hess(i, j);
      for (int k = 0; k < n; ++k) s -= g.at(k, i, j) * cj.grad(k);
      r.set(i, j, s);
    }
  return r;
}

double closedness_residual(const OneFormField& b, std::span<const double> x) {
  const int n = b.dim;
  const JetVec bj = b.eval(seed_point(x, 1));
  double r = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      r = std::max(r, std::abs(bj[i].grad(j) - bj[j].grad(i)));
  return r;
}

double metric_compat_residual(const MetricField& a, std::span<const double> x) {
  const int n = a.dim;
  const JetMat aj = a.eval(seed_point(x, 1));
  const T3 g = christoffel(a, x);
  double r = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double s = aj.at(i, j).grad(k);
        for (int m = 0; m < n; ++m) {
          s -= g.at(m, i, k) * aj.at(m, j).value();
          s -= g.at(m, j, k) * aj.at(i, m).value();
        }
        r = std::max(r, std::abs(s));
      }
  return r;
}

}  // namespace cvf
