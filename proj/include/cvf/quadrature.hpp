#pragma once

#include <cmath>
#include <functional>

#include "cvf/errors.hpp"

namespace cvf {

// Adaptive Gauss-Kronrod 7-15: the K15 value is the estimate, |K15 - G7|
// drives bisection until the requested absolute error is met.
namespace gk {

inline constexpr double kNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double kWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
// G7 weights aligned with kNodes[1], kNodes[3], kNodes[5], kNodes[7]
inline constexpr double kGaussWeights[4] = {0.129484966168870, 0.279705391489277,
                                            0.381830050505119, 0.417959183673469};

struct Panel {
  double kronrod;
  double err;
};

inline Panel panel(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double k15 = kWeights[7] * f(c);
  double g7 = kGaussWeights[3] * f(c);
  for (int i = 0; i < 7; ++i) {
    const double fp = f(c + h * kNodes[i]);
    const double fm = f(c - h * kNodes[i]);
    k15 += kWeights[i] * (fp + fm);
    if (i % 2 == 1) g7 += kGaussWeights[i / 2] * (fp + fm);
  }
  return {k15 * h, std::abs(k15 - g7) * h};
}

inline double adaptive(const std::function<double(double)>& f, double a, double b,
                       double abs_tol, int depth) {
  const Panel p = panel(f, a, b);
  if (p.err <= abs_tol || b - a < 1e-14) return p.kronrod;
  if (depth > 48)
    throw IntegrationError("quadrature: refinement limit reached on [" +
                           std::to_string(a) + ", " + std::to_string(b) + "]");
  const double m = 0.5 * (a + b);
  return adaptive(f, a, m, abs_tol / 2, depth + 1) +
         adaptive(f, m, b, abs_tol / 2, depth + 1);
}

}  // namespace gk

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double abs_tol = 1e-11) {
  if (a == b) return 0.0;
  return gk::adaptive(f, a, b, abs_tol, 0);
}

}  // namespace cvf
