#include "cvf/checker.hpp"

#include <cmath>

#include "cvf/ode.hpp"
#include "cvf/sampling.hpp"

namespace cvf {

double xv_apply(const VectorField& v, const PhaseFunction& g,
                std::span<const double> x, std::span<const double> y) {
  const int n = v.dim;
  // x-slot derivatives, y held constant
  const Jet3 gx = g.eval(seed_point(x, 1), seed_constants(y, n, 1));
  // y-slot derivatives, x held constant
  const Jet3 gy = g.eval(seed_constants(x, n, 1), seed_point(y, 1));
  const Vec vv = vector_value(v, x);
  const Mat dv = vector_jacobian(v, x);

  double r = 0.0;
  for (int i = 0; i < n; ++i) r += vv[i] * gx.grad(i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r += y[i] * dv.at(j, i) * gy.grad(j);
  return r;
}

namespace {

// Draw (x, y) pairs, skipping degenerate evaluations; the residual
// functional may throw to reject a sample.
template <class Residual>
CheckReport sampled_report(const std::string& name, const MetricField& a,
                           int samples, std::uint64_t seed, double tol,
                           Residual&& residual) {
  CheckReport rep;
  rep.name = name;
  rep.seed = seed;
  rep.tolerance = tol;
  Sampler s(seed);
  int rejected = 0;
  while (static_cast<int>(rep.residuals.size()) < samples) {
    const Vec x = s.metric_point(a);
    const Vec y = s.unit_sphere(a.dim);
    try {
      rep.residuals.push_back(residual(x, y));
    } catch (const std::runtime_error&) {
      if (++rejected > 100 * samples)
        throw EvalError("check " + name + ": rejection rate too high");
    }
  }
  if (rejected > 0)
    rep.note = std::to_string(rejected) + " degenerate samples resampled";
  rep.finalize();
  return rep;
}

double v00_plus_2c_alpha2(const MetricField& a, const VectorField& v,
                          const ScalarField& c, std::span<const double> x,
                          std::span<const double> y) {
  const int n = a.dim;
  const Mat vij = covariant_d1_vector_lower(v, a, x);
  const double a2 = alpha_sq_value(a, x, y);
  double v00 = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v00 += vij.at(i, j) * y[i] * y[j];
  return v00 + 2.0 * scalar_value(c, x) * a2;
}

}  // namespace

CheckReport check_conformal_finsler(const FinslerMetric& f, const VectorField& v,
                                    const ScalarField& c, int samples,
                                    std::uint64_t seed, double tol) {
  const PhaseFunction g = f.as_phase();
  return sampled_report(
      "finsler", f.a, samples, seed, tol, [&](const Vec& x, const Vec& y) {
        const double fv = f.value(x, y);
        if (fv <= 0.0) throw EvalError("F <= 0");
        const double lhs = xv_apply(v, g, x, y);
        return std::abs(lhs + 2.0 * scalar_value(c, x) * fv) / fv;
      });
}

CheckReport check_conformal_riemann(const MetricField& a, const VectorField& v,
                                    const ScalarField& c, int samples,
                                    std::uint64_t seed, double tol) {
  return sampled_report("riemann", a, samples, seed, tol,
                        [&](const Vec& x, const Vec& y) {
                          const double a2 = alpha_sq_value(a, x, y);
                          return std::abs(v00_plus_2c_alpha2(a, v, c, x, y)) / a2;
                        });
}

PairedReports check_ab_system(const MetricField& a, const OneFormField& b,
                              const VectorField& v, const ScalarField& c,
                              int samples, std::uint64_t seed, double tol) {
  const int n = a.dim;
  CheckReport mat_rep, vec_rep;
  mat_rep.name = "ab_system_matrix";
  vec_rep.name = "ab_system_vector";
  mat_rep.seed = vec_rep.seed = seed;
  mat_rep.tolerance = vec_rep.tolerance = tol;

  Sampler s(seed);
  for (int k = 0; k < samples; ++k) {
    const Vec x = s.metric_point(a);

    const Mat vij = covariant_d1_vector_lower(v, a, x);
    const Mat bij = covariant_d1_oneform(b, a, x);
    const SymMatrix av = metric_value(a, x);
    const SymMatrix ainv = spd_inverse(av);
    const Vec bl = oneform_value(b, x);
    const Vec vv = vector_value(v, x);
    const double cv = scalar_value(c, x);

    const double a_scale = av.max_abs();
    double mr = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        mr = std::max(mr, std::abs(vij.at(i, j) + vij.at(j, i) +
                                   4.0 * cv * av.at(i, j)));
    mat_rep.residuals.push_back(mr / a_scale);

    const Vec braised = ainv.mul(bl);
    double b_scale = 1.0;
    for (int i = 0; i < n; ++i) b_scale = std::max(b_scale, 1.0 + std::abs(bl[i]));
    double vr = 0.0;
    for (int i = 0; i < n; ++i) {
      double s2 = 2.0 * cv * bl[i];
      for (int j = 0; j < n; ++j)
        s2 += vv[j] * bij.at(i, j) + braised[j] * vij.at(j, i);
      vr = std::max(vr, std::abs(s2));
    }
    vec_rep.residuals.push_back(vr / b_scale);
  }
  mat_rep.finalize();
  vec_rep.finalize();
  return {mat_rep, vec_rep};
}

double kang_residual(const MetricField& a, const OneFormField& b,
                     const PhiFunction& phi, const VectorField& v,
                     const ScalarField& c, std::span<const double> x,
                     std::span<const double> y) {
  const int n = a.dim;
  const double a2 = alpha_sq_value(a, x, y);
  if (a2 <= 0.0) throw EvalError("kang_residual: alpha^2 <= 0");
  const double alpha = std::sqrt(a2);
  const double beta = beta_value(b, x, y);
  const double s = beta / alpha;
  if (std::abs(s) > phi.s_max)
    throw RegularityError("kang_residual: s = " + std::to_string(s) +
                          " outside phi range");

  const Mat vij = covariant_d1_vector_lower(v, a, x);
  const Mat bij = covariant_d1_oneform(b, a, x);
  const SymMatrix ainv = spd_inverse(metric_value(a, x));
  const Vec bl = oneform_value(b, x);
  const Vec braised = ainv.mul(bl);
  const Vec vv = vector_value(v, x);
  const double cv = scalar_value(c, x);

  double v00 = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v00 += vij.at(i, j) * y[i] * y[j];
  double mix = 0.0;  // (V^i b_{j;i} + b^i V_{i;j}) y^j
  for (int j = 0; j < n; ++j) {
    double t = 0.0;
    for (int i = 0; i < n; ++i) t += vv[i] * bij.at(j, i) + braised[i] * vij.at(i, j);
    mix += t * y[j];
  }

  const double pv = phi.value(s), pd = phi.d1(s);
  const double lhs = (pv - s * pd) * v00 + alpha * pd * mix;
  const double rhs = -2.0 * cv * pv * a2;
  return std::abs(lhs - rhs) / (pv * a2);
}

Vec series_coefficients(SeriesBranch branch, const Vec& phi_coeffs,
                        const AdaptedFrameData& f) {
  const int K = static_cast<int>(phi_coeffs.size()) - 1;
  auto coeff = [&](int k) { return (k < 0 || k > K) ? 0.0 : phi_coeffs[k]; };
  Vec p(K + 1, 0.0);
  for (int k = 0; k <= K; ++k) {
    if (branch == SeriesBranch::A) {
      p[k] = (k - 2) * coeff(k - 1) * (f.V10 + f.V01) -
             (k + 1) * coeff(k + 1) * f.b * (f.b * f.V10 + f.Vb0);
    } else {
      p[k] = (k - 2) * coeff(k - 1) * (-2.0 * f.c - f.V11) -
             (k + 1) * coeff(k + 1) * f.b *
                 (-2.0 * f.b * f.c - f.b * f.V11 - f.Vb1);
    }
  }
  return p;
}

CheckReport c_invariant_report(const ScalarField& c, double mu, const MetricField& a,
                               int samples, std::uint64_t seed, double tol) {
  const Vec x0 = a.domain.center;
  auto big_c = [&](const Vec& x) {
    const double cv = scalar_value(c, x);
    return grad_norm_sq(c, a, x) + mu * cv * cv;
  };
  const double c_ref = big_c(x0);

  CheckReport rep;
  rep.name = "c_invariant";
  rep.seed = seed;
  rep.tolerance = tol;
  Sampler s(seed);
  for (int k = 0; k < samples; ++k) {
    const Vec x = s.metric_point(a);
    rep.residuals.push_back(std::abs(big_c(x) - c_ref) / (1.0 + std::abs(c_ref)));
  }
  rep.finalize();
  return rep;
}

CheckReport closed_conformal_residual(const ScalarField& c, double mu,
                                      const MetricField& a, int samples,
                                      std::uint64_t seed, double tol) {
  const int n = a.dim;
  CheckReport rep;
  rep.name = "closed_conformal";
  rep.seed = seed;
  rep.tolerance = tol;
  Sampler s(seed);
  for (int k = 0; k < samples; ++k) {
    const Vec x = s.metric_point(a);
    const SymMatrix hess = hessian_scalar(c, a, x);
    const SymMatrix av = metric_value(a, x);
    const double cv = scalar_value(c, x);
    double r = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        r = std::max(r, std::abs(hess.at(i, j) + mu * cv * av.at(i, j)));
    rep.residuals.push_back(r);
  }
  rep.finalize();
  return rep;
}

FlowCheckResult flow_check(const FinslerMetric& f, const VectorField& v,
                           double c_const, std::span<const double> x,
                           std::span<const double> y, const Vec& t_grid,
                           double ode_tol) {
  const int n = v.dim;
  const double f0 = f.value(x, y);
  if (f0 <= 0.0) throw EvalError("flow_check: F(x,y) <= 0 at the base point");

  // State: x followed by J row-major; J(0) = I.
  Vec state(n + n * n, 0.0);
  for (int i = 0; i < n; ++i) state[i] = x[i];
  for (int i = 0; i < n; ++i) state[n + i * n + i] = 1.0;

  OdeOptions opt;
  opt.tol = ode_tol;
  auto rhs = [&](double, const Vec& s) {
    const Vec xs(s.begin(), s.begin() + n);
    const Vec vv = vector_value(v, xs);
    const Mat dv = vector_jacobian(v, xs);
    Vec d(n + n * n, 0.0);
    for (int i = 0; i < n; ++i) d[i] = vv[i];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double t = 0.0;
        for (int k = 0; k < n; ++k) t += dv.at(i, k) * s[n + k * n + j];
        d[n + i * n + j] = t;
      }
    return d;
  };

  FlowCheckResult result;
  double t_now = 0.0;
  for (double t : t_grid) {
    Vec xs(n);
    {
      // advance domain check first: integrate then test chart membership
      state = ode_integrate(rhs, state, t_now, t, opt);
      t_now = t;
      for (int i = 0; i < n; ++i) xs[i] = state[i];
      if (!f.a.domain.contains(xs)) {
        result.truncated = true;
        break;
      }
    }
    Vec jy(n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) jy[i] += state[n + i * n + j] * y[j];
    const double ft = f.value(xs, jy);
    const double expected = std::exp(-2.0 * c_const * t) * f0;
    result.deviations.push_back(std::abs(ft - expected) / f0);
  }
  for (double d : result.deviations)
    result.max_deviation = std::max(result.max_deviation, d);
  return result;
}

}  // namespace cvf
