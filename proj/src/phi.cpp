#include "cvf/phi.hpp"

#include <cmath>

namespace cvf {

namespace {

double series_eval(const Vec& a, double s, int deriv) {
  // d^deriv/ds^deriv of sum a_i s^i, by Horner on the shifted coefficients
  double r = 0.0;
  for (int i = static_cast<int>(a.size()) - 1; i >= deriv; --i) {
    double f = 1.0;
    for (int m = 0; m < deriv; ++m) f *= i - m;
    r = r * s + f * a[i];
  }
  return r;
}

}  // namespace

double PhiFunction::value(double s) const {
  switch (kind) {
    case PhiKind::randers: return 1.0 + s;
    case PhiKind::randers_type: return std::sqrt(1.0 + k * s * s) + eps * s;
    case PhiKind::quadratic: return 1.0 + kappa * s + eps * s * s;
    case PhiKind::sqrt_quad: return std::sqrt(1.0 + k * s * s);
    case PhiKind::power_series: return series_eval(coeffs, s, 0);
  }
  return 0.0;
}

double PhiFunction::d1(double s) const {
  switch (kind) {
    case PhiKind::randers: return 1.0;
    case PhiKind::randers_type: return k * s / std::sqrt(1.0 + k * s * s) + eps;
    case PhiKind::quadratic: return kappa + 2.0 * eps * s;
    case PhiKind::sqrt_quad: return k * s / std::sqrt(1.0 + k * s * s);
    case PhiKind::power_series: return series_eval(coeffs, s, 1);
  }
  return 0.0;
}

double PhiFunction::d2(double s) const {
  switch (kind) {
    case PhiKind::randers: return 0.0;
    case PhiKind::randers_type:
    case PhiKind::sqrt_quad: {
      const double w = 1.0 + k * s * s;
      return k / (w * std::sqrt(w));
    }
    case PhiKind::quadratic: return 2.0 * eps;
    case PhiKind::power_series: return series_eval(coeffs, s, 2);
  }
  return 0.0;
}

double PhiFunction::d3(double s) const {
  switch (kind) {
    case PhiKind::randers: return 0.0;
    case PhiKind::randers_type:
    case PhiKind::sqrt_quad: {
      const double w = 1.0 + k * s * s;
      return -3.0 * k * k * s / (w * w * std::sqrt(w));
    }
    case PhiKind::quadratic: return 0.0;
    case PhiKind::power_series: return series_eval(coeffs, s, 3);
  }
  return 0.0;
}

std::string PhiFunction::name() const {
  switch (kind) {
    case PhiKind::randers: return "randers";
    case PhiKind::randers_type: return "randers_type";
    case PhiKind::quadratic: return "quadratic";
    case PhiKind::sqrt_quad: return "sqrt_quad";
    case PhiKind::power_series: return "power_series";
  }
  return "?";
}

PhiFunction phi_randers() { return PhiFunction{PhiKind::randers, 0, 0, 0, {}, 0.81}; }

PhiFunction phi_randers_type(double k, double eps) {
  return PhiFunction{PhiKind::randers_type, k, eps, 0, {}, 0.81};
}

PhiFunction phi_quadratic(double kappa, double eps) {
  return PhiFunction{PhiKind::quadratic, 0, eps, kappa, {}, 0.81};
}

PhiFunction phi_sqrt_quad(double k) {
  return PhiFunction{PhiKind::sqrt_quad, k, 0, 0, {}, 0.81};
}

PhiFunction phi_power_series(Vec coeffs) {
  if (coeffs.size() < 3)
    throw ValidationError("power_series needs K >= 2 coefficients",
                          static_cast<double>(coeffs.size()));
  if (std::abs(coeffs[0] - 1.0) > 1e-12)
    throw ValidationError("phi(0) = 1 (a_0 = 1)", std::abs(coeffs[0] - 1.0));
  PhiFunction p{PhiKind::power_series, 0, 0, 0, std::move(coeffs), 0.81};
  return p;
}

Vec phi_series(const PhiFunction& phi, int K) {
  Vec a(K + 1, 0.0);
  switch (phi.kind) {
    case PhiKind::randers:
      a[0] = 1.0;
      if (K >= 1) a[1] = 1.0;
      break;
    case PhiKind::randers_type:
    case PhiKind::sqrt_quad: {
      // sqrt(1+u) = sum binom(1/2, m) u^m with u = k s^2
      double c = 1.0;
      double kp = 1.0;
      for (int m = 0; 2 * m <= K; ++m) {
        a[2 * m] = c * kp;
        c *= (0.5 - m) / (m + 1);
        kp *= phi.k;
      }
      if (phi.kind == PhiKind::randers_type && K >= 1) a[1] += phi.eps;
      break;
    }
    case PhiKind::quadratic:
      a[0] = 1.0;
      if (K >= 1) a[1] = phi.kappa;
      if (K >= 2) a[2] = phi.eps;
      break;
    case PhiKind::power_series:
      for (int i = 0; i <= K && i < static_cast<int>(phi.coeffs.size()); ++i)
        a[i] = phi.coeffs[i];
      break;
  }
  return a;
}

bool phi_regular_on(const PhiFunction& phi, double s_max) {
  const int grid = 201;
  for (int i = 0; i < grid; ++i) {
    const double s = -s_max + 2.0 * s_max * i / (grid - 1);
    if (phi.value(s) - s * phi.d1(s) <= 0.0) return false;
  }
  return true;
}

double phi_ode_residual(const PhiFunction& phi, double k1, double k2, double k3,
                        double s) {
  const double s2 = s * s;
  const double lhs = (1.0 + (k1 + k3) * s2 + k2 * s2 * s2) * phi.d2(s);
  const double rhs = (k1 + k2 * s2) * (phi.value(s) - s * phi.d1(s));
  return lhs - rhs;
}

Jet3 phi_jet(const PhiFunction& phi, const Jet3& s) {
  const double s0 = s.value();
  return compose(s, phi.value(s0), phi.d1(s0), phi.d2(s0), phi.d3(s0));
}

}  // namespace cvf
