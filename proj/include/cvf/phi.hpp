#pragma once

#include <string>

#include "cvf/errors.hpp"
#include "cvf/jet.hpp"
#include "cvf/linalg.hpp"

namespace cvf {

enum class PhiKind { randers, randers_type, quadratic, sqrt_quad, power_series };

// phi(s) with analytic derivatives per kind.  phi(0) = 1 always.
//   randers:       1 + s
//   randers_type:  sqrt(1 + k s^2) + eps s
//   quadratic:     1 + kappa s + eps s^2
//   sqrt_quad:     sqrt(1 + k s^2)
//   power_series:  sum a_i s^i, coefficients stored
struct PhiFunction {
  PhiKind kind = PhiKind::randers;
  double k = 0.0;
  double eps = 0.0;
  double kappa = 0.0;
  Vec coeffs;           // power_series only, a_0..a_K
  double s_max = 0.81;  // declared regularity range |s| <= s_max

  double value(double s) const;
  double d1(double s) const;
  double d2(double s) const;
  double d3(double s) const;

  std::string name() const;
};

PhiFunction phi_randers();
PhiFunction phi_randers_type(double k, double eps);
PhiFunction phi_quadratic(double kappa, double eps);
PhiFunction phi_sqrt_quad(double k);
PhiFunction phi_power_series(Vec coeffs);  // requires a_0 = 1, >= 3 coefficients

// Taylor coefficients a_0..a_K of phi at s = 0.
Vec phi_series(const PhiFunction& phi, int K);

// phi(s) - s phi'(s) > 0 on [-s_max, s_max] (201-point grid).
bool phi_regular_on(const PhiFunction& phi, double s_max);

// LHS - RHS of {1+(k1+k3)s^2+k2 s^4} phi'' = (k1+k2 s^2){phi - s phi'}.
double phi_ode_residual(const PhiFunction& phi, double k1, double k2, double k3,
                        double s);

// phi applied to a jet-valued s (chain rule through the stored derivatives).
Jet3 phi_jet(const PhiFunction& phi, const Jet3& s);

}  // namespace cvf
