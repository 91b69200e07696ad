#pragma once

#include <array>
#include <cstdint>
#include <functional>

#include "cvf/checker.hpp"
#include "cvf/fields.hpp"
#include "cvf/report.hpp"

namespace cvf {

enum class TripleKind { closed_form, ode_solution, navigation, randers_projective, custom };

// (u, v, w)(t) on t in [0, t_max].  All built-in kinds satisfy the shared
// first-order system
//   u' = (v - k1 u)/D,  v' = [u(k2 u - k3 v - 2 k1 v) + 2 v^2]/(u D),
//   w' = w (3v - k3 u - 2 k1 u)/(2 u D),   D = 1 + (k1+k3) t + k2 t^2,
// which also supplies the higher t-derivatives for jet evaluation:
//   closed_form:        u = e^{2 chi}, v = (k1+k3+k2 t) u,
//                       w = sqrt(D) e^{chi}, 2 chi = int_0^t (k2 s+k3)/D ds
//   ode_solution:       integrated from (u0, v0, w0)
//   navigation:         (1-t, t-1, t-1), the (0,0,-1) solution
//   randers_projective: (1, 0, 1/sqrt(1-t)), the other (0,0,-1) branch
struct UVWTriple {
  TripleKind kind = TripleKind::navigation;
  double k1 = 0.0, k2 = 0.0, k3 = 0.0;
  double t_max = 0.81;
  std::array<double, 3> init{1.0, 0.0, 1.0};  // ode_solution only
  std::function<std::array<Jet3, 3>(const Jet3&)> custom_eval;  // custom only
};

UVWTriple uvw_closed_form_triple(double k1, double k2, double k3, double t_max = 0.81);
UVWTriple uvw_ode_triple(double k1, double k2, double k3, std::array<double, 3> init,
                         double t_max = 0.81);
UVWTriple navigation_triple();
UVWTriple randers_projective_triple();

// The canonical closed-form triple at one t (chi by adaptive quadrature,
// absolute error <= 1e-11).  Throws when D has a root inside [0, t],
// naming the root.
std::array<double, 3> uvw_closed_form(double k1, double k2, double k3, double t);

// Adaptive Dormand-Prince solve of the (u,v,w) system; halts with a
// diagnostic when u reaches 0.
std::array<double, 3> uvw_ode_solve(double k1, double k2, double k3,
                                    std::array<double, 3> init, double t,
                                    double tol = 1e-11);

std::array<double, 3> triple_values(const UVWTriple& triple, double t);
std::array<Jet3, 3> triple_jets(const UVWTriple& triple, const Jet3& t);

// b^2 = a^{ij} b_i b_j as a jet-evaluable scalar field.
ScalarField b_norm_sq_field(const MetricField& a, const OneFormField& b);

// h_ij = u(b^2) a_ij + v(b^2) b_i b_j and p_i = w(b^2) b_i.
MetricField deformed_metric(const MetricField& a, const OneFormField& b,
                            const UVWTriple& triple);
OneFormField deformed_oneform(const MetricField& a, const OneFormField& b,
                              const UVWTriple& triple);

// Pointwise values of the deformation at (x, y).
struct DeformResult {
  double h2;
  double rho;
  double b2;
};
DeformResult deform(const MetricField& a, const OneFormField& b,
                    const UVWTriple& triple, std::span<const double> x,
                    std::span<const double> y);

// Inverse of p^2 = b^2/(1 - b^2).
double randers_b2_from_p2(double p2);

// X_V(b^2) = 2 V^j b^i b_{i;j}, indices raised by a.
double xv_b2(const MetricField& a, const OneFormField& b, const VectorField& v,
             std::span<const double> x);

// Residuals of the base system against (a, b) and of the deformed system
// V_{0|0} = -2 c h^2, V^j p_{i|j} + p^j V_{j|i} = -2 c p_i against (h, rho),
// on the same sample stream.
struct Lemma41Reports {
  CheckReport base;
  CheckReport deformed;
};
Lemma41Reports check_lemma41(const MetricField& a, const OneFormField& b,
                             const VectorField& v, const ScalarField& c,
                             const UVWTriple& triple, int samples,
                             std::uint64_t seed, double tol_base, double tol_deformed);

}  // namespace cvf
