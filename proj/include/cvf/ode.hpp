#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "cvf/errors.hpp"
#include "cvf/linalg.hpp"

namespace cvf {

// Dormand-Prince 5(4) with adaptive step control.  `deriv` maps (t, y)
// to dy/dt; `guard`, when set, is checked after every accepted step and
// aborts with IntegrationError on false.
struct OdeOptions {
  double tol = 1e-11;  // used as absolute and relative tolerance
  double h_init = 1e-3;
  int max_steps = 2'000'000;
  std::function<bool(double t, const Vec& y)> guard;
};

using OdeRhs = std::function<Vec(double, const Vec&)>;

inline Vec ode_integrate(const OdeRhs& deriv, Vec y, double t0, double t1,
                         const OdeOptions& opt = {}) {
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600,
                          e3 = 500.0 / 1113 - 7571.0 / 16695,
                          e4 = 125.0 / 192 - 393.0 / 640,
                          e5 = -2187.0 / 6784 + 92097.0 / 339200,
                          e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

  if (t0 == t1) return y;
  const double dir = t1 > t0 ? 1.0 : -1.0;
  const size_t n = y.size();
  double t = t0;
  double h = dir * std::min(opt.h_init, std::abs(t1 - t0));

  auto axpy = [n](const Vec& base, std::initializer_list<std::pair<double, const Vec*>> terms,
                  double h_) {
    Vec r = base;
    for (auto [c, v] : terms)
      for (size_t i = 0; i < n; ++i) r[i] += h_ * c * (*v)[i];
    return r;
  };

  for (int step = 0; step < opt.max_steps; ++step) {
    if (dir * (t - t1) >= 0.0) return y;
    if (dir * (t + h - t1) > 0.0) h = t1 - t;
    if (std::abs(h) <= 1e-14 * (1.0 + std::abs(t1))) return y;

    const Vec k1 = deriv(t, y);
    const Vec k2 = deriv(t + h / 5, axpy(y, {{a21, &k1}}, h));
    const Vec k3 = deriv(t + 3 * h / 10, axpy(y, {{a31, &k1}, {a32, &k2}}, h));
    const Vec k4 = deriv(t + 4 * h / 5, axpy(y, {{a41, &k1}, {a42, &k2}, {a43, &k3}}, h));
    const Vec k5 = deriv(t + 8 * h / 9,
                         axpy(y, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}, h));
    const Vec k6 = deriv(
        t + h, axpy(y, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}, h));
    const Vec y5 =
        axpy(y, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}}, h);
    const Vec k7 = deriv(t + h, y5);

    double err = 0.0;
    for (size_t i = 0; i < n; ++i) {
      const double ei =
          h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
               e7 * k7[i]);
      const double scale = opt.tol * (1.0 + std::max(std::abs(y[i]), std::abs(y5[i])));
      err = std::max(err, std::abs(ei) / scale);
    }

    if (err <= 1.0) {
      t += h;
      y = y5;
      if (opt.guard && !opt.guard(t, y))
        throw IntegrationError("integration halted at t = " + std::to_string(t));
    }
    const double factor =
        err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
    h *= std::min(5.0, std::max(0.2, factor));
    if (std::abs(h) < 1e-15)
      throw IntegrationError("step size underflow at t = " + std::to_string(t));
  }
  throw IntegrationError("step budget exhausted before t = " + std::to_string(t1));
}

}  // namespace cvf
