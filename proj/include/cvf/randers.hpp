#pragma once

#include <span>

#include "cvf/fields.hpp"
#include "cvf/geometry.hpp"

namespace cvf {

// Projectively flat Randers data built from (lambda, mu, e): alpha in
// the projective constant-curvature chart, rho the closed conformal
// 1-form dual to the closed_i field, beta = sqrt(1-b^2) rho, together
// with the scalar evaluators xi, tau, c, p^2, b^2, delta.
struct RandersModel {
  double lambda = 0.0;
  double mu = 0.0;
  Vec e;
  int n = 3;

  MetricField alpha;
  OneFormField rho;
  OneFormField beta;
  ScalarField tau_field;
  ScalarField c_field;
  ScalarField b2_field;
};

RandersModel make_randers_model(double lambda, double mu, Vec e, int n);

double randers_xi(const RandersModel& m, std::span<const double> x);
double randers_tau(const RandersModel& m, std::span<const double> x);
double randers_c(const RandersModel& m, std::span<const double> x);
double randers_p2(const RandersModel& m, std::span<const double> x);
double randers_b2(const RandersModel& m, std::span<const double> x);
// delta^2 = ||grad c||^2_alpha + mu c^2 evaluated from the definition.
double randers_delta_sq(const RandersModel& m, std::span<const double> x);
// -tau/sqrt(1-b^2); agrees with randers_c pointwise.
double randers_c_from_tau(const RandersModel& m, std::span<const double> x);

// Sup-norm of b_{i;j} - 2 tau (a_ij - b_i b_j).
double s_curvature_residual(const MetricField& a, const OneFormField& b,
                            const ScalarField& tau, std::span<const double> x);

// K = (3/4)(mu + 4 tau^2)(alpha - beta)/(alpha + beta) + mu/4.
double flag_curvature_closed_form(const RandersModel& m, std::span<const double> x,
                                  std::span<const double> y);

// K from covariant data only: K F^2 = mu alpha^2 + 3 (Phi/2F)^2 - Psi/(2F)
// with Phi = b_{i;j} y^i y^j, Psi = b_{i;j;k} y^i y^j y^k, F = alpha + beta,
// and mu recovered as scalar curvature / (n(n-1)).
double flag_curvature_projective(const MetricField& a, const OneFormField& b,
                                 std::span<const double> x,
                                 std::span<const double> y);

// |tau_0 + (1/2)(mu + 4 tau^2) beta| with tau_0 = (d tau/dx^i) y^i.
double tau0_identity_residual(const RandersModel& m, std::span<const double> x,
                              std::span<const double> y);

// The mu > 0 chain: beta and K rewritten through (c, delta), the K1/K2
// envelope in both algebraic forms, and the global curvature bounds.
struct CompactCaseData {
  double beta;        // 2 c_0 / sqrt(4 d^2 + mu^2 - 4 mu c^2)
  double K;           // the (c, delta) form of the flag curvature
  double tau_sq;      // mu^2 c^2 / (4 d^2 + mu^2 - 4 mu c^2)
  double A;           // sqrt(d^2 - mu c^2) / sqrt(4 d^2 + mu^2 - 4 mu c^2)
  double A_sup;       // delta / sqrt(4 d^2 + mu^2)
  double K1, K2;      // quotient form
  double K1_alt, K2_alt;  // (1 -+ 2A)^2 form; equal to K1/K2
  double bound_lo, bound_hi;  // global bounds
};
CompactCaseData compact_case_quantities(const RandersModel& m,
                                        std::span<const double> x,
                                        std::span<const double> y);

// Rescaling of delta used to compare the global bounds at mu = 1.
double delta_bar_of(double delta, double mu);

}  // namespace cvf
