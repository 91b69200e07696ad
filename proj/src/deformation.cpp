#include "cvf/deformation.hpp"

#include <cmath>

#include "cvf/ode.hpp"
#include "cvf/quadrature.hpp"
#include "cvf/sampling.hpp"

namespace cvf {

namespace {

double denom(double k1, double k2, double k3, double t) {
  return 1.0 + (k1 + k3) * t + k2 * t * t;
}

// Root of D inside [0, t], if any.
void check_denominator(double k1, double k2, double k3, double t) {
  const double s = k1 + k3;
  auto in_range = [t](double r) { return r >= 0.0 && r <= t; };
  if (k2 == 0.0) {
    if (s != 0.0) {
      const double r = -1.0 / s;
      if (in_range(r))
        throw EvalError("uvw denominator vanishes at t = " + std::to_string(r));
    }
    return;
  }
  const double disc = s * s - 4.0 * k2;
  if (disc < 0.0) return;
  const double sq = std::sqrt(disc);
  for (const double r : {(-s - sq) / (2.0 * k2), (-s + sq) / (2.0 * k2)})
    if (in_range(r))
      throw EvalError("uvw denominator vanishes at t = " + std::to_string(r));
}

std::array<double, 3> ode_rhs(double k1, double k2, double k3, double t, double u,
                              double v, double w) {
  const double d = denom(k1, k2, k3, t);
  return {(v - k1 * u) / d,
          (u * (k2 * u - k3 * v - 2.0 * k1 * v) + 2.0 * v * v) / (u * d),
          w * (3.0 * v - k3 * u - 2.0 * k1 * u) / (2.0 * u * d)};
}

// Taylor derivatives of (u,v,w) at t up to order 3, bootstrapped from
// the shared first-order system via 1-d jet arithmetic.
struct UVWTaylor {
  std::array<double, 4> u, v, w;  // value, d1, d2, d3
};

UVWTaylor taylor_from_system(double k1, double k2, double k3, double t,
                             std::array<double, 3> vals) {
  UVWTaylor s{};
  s.u[0] = vals[0];
  s.v[0] = vals[1];
  s.w[0] = vals[2];
  for (int order = 0; order < 3; ++order) {
    Jet3 jt = Jet3::variable(1, order, t, 0);
    Jet3 ju(1, order, s.u[0]), jv(1, order, s.v[0]), jw(1, order, s.w[0]);
    if (order >= 1) {
      ju.set_grad(0, s.u[1]);
      jv.set_grad(0, s.v[1]);
      jw.set_grad(0, s.w[1]);
    }
    if (order >= 2) {
      ju.set_hess(0, 0, s.u[2]);
      jv.set_hess(0, 0, s.v[2]);
      jw.set_hess(0, 0, s.w[2]);
    }
    const Jet3 d = 1.0 + (k1 + k3) * jt + k2 * jt * jt;
    const Jet3 du = (jv - k1 * ju) / d;
    const Jet3 dv = (ju * (k2 * ju - k3 * jv - 2.0 * k1 * jv) + 2.0 * jv * jv) /
                    (ju * d);
    const Jet3 dw = jw * (3.0 * jv - k3 * ju - 2.0 * k1 * ju) / (2.0 * ju * d);
    if (order == 0) {
      s.u[1] = du.value();
      s.v[1] = dv.value();
      s.w[1] = dw.value();
    } else if (order == 1) {
      s.u[2] = du.grad(0);
      s.v[2] = dv.grad(0);
      s.w[2] = dw.grad(0);
    } else {
      s.u[3] = du.hess(0, 0);
      s.v[3] = dv.hess(0, 0);
      s.w[3] = dw.hess(0, 0);
    }
  }
  return s;
}

}  // namespace

std::array<double, 3> uvw_closed_form(double k1, double k2, double k3, double t) {
  check_denominator(k1, k2, k3, t);
  const double two_chi = integrate(
      [k1, k2, k3](double s) { return (k2 * s + k3) / denom(k1, k2, k3, s); }, 0.0,
      t, 1e-11);
  const double chi = 0.5 * two_chi;
  const double u = std::exp(two_chi);
  const double v = (k1 + k3 + k2 * t) * u;
  const double w = std::sqrt(denom(k1, k2, k3, t)) * std::exp(chi);
  return {u, v, w};
}

std::array<double, 3> uvw_ode_solve(double k1, double k2, double k3,
                                    std::array<double, 3> init, double t,
                                    double tol) {
  check_denominator(k1, k2, k3, t);
  OdeOptions opt;
  opt.tol = tol;
  opt.guard = [](double, const Vec& y) { return std::abs(y[0]) > 1e-10; };
  auto rhs = [k1, k2, k3](double s, const Vec& y) {
    const auto d = ode_rhs(k1, k2, k3, s, y[0], y[1], y[2]);
    return Vec{d[0], d[1], d[2]};
  };
  Vec y{init[0], init[1], init[2]};
  try {
    y = ode_integrate(rhs, y, 0.0, t, opt);
  } catch (const IntegrationError& e) {
    throw IntegrationError(std::string("uvw system: u reached 0 (") + e.what() + ")");
  }
  return {y[0], y[1], y[2]};
}

UVWTriple uvw_closed_form_triple(double k1, double k2, double k3, double t_max) {
  UVWTriple tr;
  tr.kind = TripleKind::closed_form;
  tr.k1 = k1;
  tr.k2 = k2;
  tr.k3 = k3;
  tr.t_max = t_max;
  return tr;
}

UVWTriple uvw_ode_triple(double k1, double k2, double k3, std::array<double, 3> init,
                         double t_max) {
  UVWTriple tr;
  tr.kind = TripleKind::ode_solution;
  tr.k1 = k1;
  tr.k2 = k2;
  tr.k3 = k3;
  tr.init = init;
  tr.t_max = t_max;
  return tr;
}

UVWTriple navigation_triple() {
  UVWTriple tr;
  tr.kind = TripleKind::navigation;
  tr.k1 = 0.0;
  tr.k2 = 0.0;
  tr.k3 = -1.0;
  return tr;
}

UVWTriple randers_projective_triple() {
  UVWTriple tr;
  tr.kind = TripleKind::randers_projective;
  tr.k1 = 0.0;
  tr.k2 = 0.0;
  tr.k3 = -1.0;
  return tr;
}

std::array<double, 3> triple_values(const UVWTriple& triple, double t) {
  if (t < 0.0 || t > triple.t_max)
    throw EvalError("triple: t = " + std::to_string(t) + " outside [0, " +
                    std::to_string(triple.t_max) + "]");
  switch (triple.kind) {
    case TripleKind::closed_form:
      return uvw_closed_form(triple.k1, triple.k2, triple.k3, t);
    case TripleKind::ode_solution:
      return uvw_ode_solve(triple.k1, triple.k2, triple.k3, triple.init, t);
    case TripleKind::navigation:
      return {1.0 - t, t - 1.0, t - 1.0};
    case TripleKind::randers_projective:
      return {1.0, 0.0, 1.0 / std::sqrt(1.0 - t)};
    case TripleKind::custom: {
      const auto j = triple.custom_eval(Jet3::constant(1, 0, t));
      return {j[0].value(), j[1].value(), j[2].value()};
    }
  }
  throw EvalError("triple: unknown kind");
}

std::array<Jet3, 3> triple_jets(const UVWTriple& triple, const Jet3& t) {
  if (triple.kind == TripleKind::custom) return triple.custom_eval(t);
  const auto vals = triple_values(triple, t.value());
  const UVWTaylor s =
      taylor_from_system(triple.k1, triple.k2, triple.k3, t.value(), vals);
  return {compose(t, s.u[0], s.u[1], s.u[2], s.u[3]),
          compose(t, s.v[0], s.v[1], s.v[2], s.v[3]),
          compose(t, s.w[0], s.w[1], s.w[2], s.w[3])};
}

ScalarField b_norm_sq_field(const MetricField& a, const OneFormField& b) {
  auto ae = a.eval;
  auto be = b.eval;
  const int n = a.dim;
  return {n, [ae, be, n](const JetVec& x) {
            const JetMat ainv = invert_jet_matrix(ae(x));
            const JetVec bv = be(x);
            Jet3 s = Jet3::constant(x[0].dim(), x[0].order(), 0.0);
            for (int i = 0; i < n; ++i)
              for (int j = 0; j < n; ++j) s += ainv.at(i, j) * bv[i] * bv[j];
            return s;
          }};
}

MetricField deformed_metric(const MetricField& a, const OneFormField& b,
                            const UVWTriple& triple) {
  const ScalarField b2f = b_norm_sq_field(a, b);
  auto ae = a.eval;
  auto be = b.eval;
  auto b2e = b2f.eval;
  const int n = a.dim;
  return {n, a.domain, [ae, be, b2e, triple, n](const JetVec& x) {
            const JetMat am = ae(x);
            const JetVec bv = be(x);
            const auto uvw = triple_jets(triple, b2e(x));
            JetMat h(n, Jet3::constant(x[0].dim(), x[0].order(), 0.0));
            for (int i = 0; i < n; ++i)
              for (int j = i; j < n; ++j) {
                const Jet3 e = uvw[0] * am.at(i, j) + uvw[1] * bv[i] * bv[j];
                h.at(i, j) = e;
                h.at(j, i) = e;
              }
            return h;
          }};
}

OneFormField deformed_oneform(const MetricField& a, const OneFormField& b,
                              const UVWTriple& triple) {
  const ScalarField b2f = b_norm_sq_field(a, b);
  auto be = b.eval;
  auto b2e = b2f.eval;
  const int n = a.dim;
  return {n, [be, b2e, triple, n](const JetVec& x) {
            const JetVec bv = be(x);
            const auto uvw = triple_jets(triple, b2e(x));
            JetVec p;
            p.reserve(n);
            for (int i = 0; i < n; ++i) p.push_back(uvw[2] * bv[i]);
            return p;
          }};
}

DeformResult deform(const MetricField& a, const OneFormField& b,
                    const UVWTriple& triple, std::span<const double> x,
                    std::span<const double> y) {
  const double a2 = alpha_sq_value(a, x, y);
  const double be = beta_value(b, x, y);
  const Vec bl = oneform_value(b, x);
  const double b2 = spd_inverse(metric_value(a, x)).quad(bl);
  const auto uvw = triple_values(triple, b2);
  const double h2 = uvw[0] * a2 + uvw[1] * be * be;
  if (h2 <= 0.0)
    throw EvalError("deform: h^2 = " + std::to_string(h2) + " not positive");
  return {h2, uvw[2] * be, b2};
}

double randers_b2_from_p2(double p2) { return p2 / (1.0 + p2); }

double xv_b2(const MetricField& a, const OneFormField& b, const VectorField& v,
             std::span<const double> x) {
  const int n = a.dim;
  const Mat bij = covariant_d1_oneform(b, a, x);
  const Vec braised = spd_inverse(metric_value(a, x)).mul(oneform_value(b, x));
  const Vec vv = vector_value(v, x);
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += braised[i] * bij.at(i, j) * vv[j];
  return 2.0 * s;
}

Lemma41Reports check_lemma41(const MetricField& a, const OneFormField& b,
                             const VectorField& v, const ScalarField& c,
                             const UVWTriple& triple, int samples,
                             std::uint64_t seed, double tol_base,
                             double tol_deformed) {
  const int n = a.dim;
  const MetricField h = deformed_metric(a, b, triple);
  const OneFormField rho = deformed_oneform(a, b, triple);

  CheckReport base, def;
  base.name = "lemma41_base";
  def.name = "lemma41_deformed";
  base.seed = def.seed = seed;
  base.tolerance = tol_base;
  def.tolerance = tol_deformed;

  Sampler s(seed);
  for (int k = 0; k < samples; ++k) {
    const Vec x = s.metric_point(a);
    const Vec y = s.unit_sphere(n);
    const double cv = scalar_value(c, x);

    {  // pair system against (a, b)
      const Mat vij = covariant_d1_vector_lower(v, a, x);
      const Mat bij = covariant_d1_oneform(b, a, x);
      const SymMatrix av = metric_value(a, x);
      const Vec bl = oneform_value(b, x);
      const Vec braised = spd_inverse(av).mul(bl);
      const Vec vv = vector_value(v, x);
      double r = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          r = std::max(r, std::abs(vij.at(i, j) + vij.at(j, i) +
                                   4.0 * cv * av.at(i, j)) /
                              av.max_abs());
      for (int i = 0; i < n; ++i) {
        double t = 2.0 * cv * bl[i];
        for (int j = 0; j < n; ++j)
          t += vv[j] * bij.at(i, j) + braised[j] * vij.at(j, i);
        r = std::max(r, std::abs(t) / (1.0 + std::abs(bl[i])));
      }
      base.residuals.push_back(r);
    }

    {  // pair system against (h, rho)
      const Mat vij = covariant_d1_vector_lower(v, h, x);
      const Mat pij = covariant_d1_oneform(rho, h, x);
      const SymMatrix hv = metric_value(h, x);
      const Vec pl = oneform_value(rho, x);
      const Vec praised = spd_inverse(hv).mul(pl);
      const Vec vv = vector_value(v, x);
      const double h2 = hv.quad(y);

      double v00 = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v00 += vij.at(i, j) * y[i] * y[j];
      double r = std::abs(v00 + 2.0 * cv * h2) / h2;
      for (int i = 0; i < n; ++i) {
        double t = 2.0 * cv * pl[i];
        for (int j = 0; j < n; ++j)
          t += vv[j] * pij.at(i, j) + praised[j] * vij.at(j, i);
        r = std::max(r, std::abs(t) / (1.0 + std::abs(pl[i])));
      }
      def.residuals.push_back(r);
    }
  }
  base.finalize();
  def.finalize();
  return {base, def};
}

}  // namespace cvf
