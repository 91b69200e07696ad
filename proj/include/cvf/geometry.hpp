#pragma once

#include <span>

#include "cvf/fields.hpp"
#include "cvf/linalg.hpp"

namespace cvf {

// Levi-Civita symbols Gamma^i_jk as jets of the given order (metric is
// evaluated at order+1, so order <= 2).
JetT3 christoffel_jets(const MetricField& a, std::span<const double> x, int order);
T3 christoffel(const MetricField& a, std::span<const double> x);

// b_{i;j} = d_j b_i - Gamma^k_ij b_k.  Row i, column j.
Mat covariant_d1_oneform(const OneFormField& b, const MetricField& a,
                         std::span<const double> x);
// b_{i;j;k} = d_k b_{i;j} - Gamma^m_ik b_{m;j} - Gamma^m_jk b_{i;m}.
T3 covariant_d2_oneform(const OneFormField& b, const MetricField& a,
                        std::span<const double> x);
// V_{i;j} for the lowered field V_i = a_ij V^j.
Mat covariant_d1_vector_lower(const VectorField& v, const MetricField& a,
                              std::span<const double> x);

// Curvature, sign fixed so the constant-curvature model metrics give
// sectional curvature exactly mu:
//   R^m_{jkl} = d_k Gamma^m_lj - d_l Gamma^m_kj + Gamma^m_kr Gamma^r_lj
//               - Gamma^m_lr Gamma^r_kj,   R_ijkl = a_im R^m_jkl,
// so that R_ijkl = mu (a_ik a_jl - a_il a_jk).
struct RiemannData {
  T4 lower;  // R_{ijkl}
  T4 mixed;  // R^m_{jkl} at (m,j,k,l)
};
RiemannData riemann(const MetricField& a, std::span<const double> x);

// K(u,v) = R(u,v,u,v) / (|u|^2 |v|^2 - <u,v>^2), norms taken in a.
double sectional_curvature(const MetricField& a, std::span<const double> x,
                           std::span<const double> u, std::span<const double> v);
double scalar_curvature(const MetricField& a, std::span<const double> x);

// a^{ij} c_i c_j.
double grad_norm_sq(const ScalarField& c, const MetricField& a,
                    std::span<const double> x);
// c_{i;j} = d_i d_j c - Gamma^k_ij c_k.
SymMatrix hessian_scalar(const ScalarField& c, const MetricField& a,
                         std::span<const double> x);

// max_{i<j} |d_j b_i - d_i b_j|.
double closedness_residual(const OneFormField& b, std::span<const double> x);

// max |a_{ij;k}|; zero for the Levi-Civita connection.
double metric_compat_residual(const MetricField& a, std::span<const double> x);

}  // namespace cvf
