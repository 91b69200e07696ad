#pragma once

#include <cstdint>
#include <span>

#include "cvf/catalog.hpp"
#include "cvf/fields.hpp"
#include "cvf/geometry.hpp"
#include "cvf/report.hpp"

namespace cvf {

// X_V(G) = V^i dG/dx^i + y^i (dV^j/dx^i) dG/dy^j.
double xv_apply(const VectorField& v, const PhaseFunction& g,
                std::span<const double> x, std::span<const double> y);

// |X_V(F) + 2cF| / F over seeded (x, y in unit sphere).  Degenerate
// samples (F <= 0 or regularity exit) are resampled and counted in note.
CheckReport check_conformal_finsler(const FinslerMetric& f, const VectorField& v,
                                    const ScalarField& c, int samples,
                                    std::uint64_t seed, double tol);

// |V_{0;0} + 2c alpha^2| / alpha^2.
CheckReport check_conformal_riemann(const MetricField& a, const VectorField& v,
                                    const ScalarField& c, int samples,
                                    std::uint64_t seed, double tol);

// The linear system: V_{i;j} + V_{j;i} = -4c a_ij (matrix stream) and
// V^j b_{i;j} + b^j V_{j;i} = -2c b_i (vector stream).
struct PairedReports {
  CheckReport matrix;
  CheckReport vector;
  bool pass() const { return matrix.pass && vector.pass; }
};
PairedReports check_ab_system(const MetricField& a, const OneFormField& b,
                              const VectorField& v, const ScalarField& c,
                              int samples, std::uint64_t seed, double tol);

// |(phi - s phi') V_{0;0} + alpha phi' (V^i b_{j;i} + b^i V_{i;j}) y^j
//  + 2 c phi alpha^2| / (phi alpha^2).
double kang_residual(const MetricField& a, const OneFormField& b,
                     const PhiFunction& phi, const VectorField& v,
                     const ScalarField& c, std::span<const double> x,
                     std::span<const double> y);

// Pointwise scalars of the adapted-frame coefficient formulas.
struct AdaptedFrameData {
  double b = 0.0;    // ||beta|| at the point
  double V10 = 0.0;  // \bar V_{1;0}
  double V01 = 0.0;  // \bar V_{0;1}
  double V11 = 0.0;  // V_{1;1}
  double Vb0 = 0.0;  // V^i \bar b_{0;i}
  double Vb1 = 0.0;  // V^i b_{1;i}
  double c = 0.0;
};

enum class SeriesBranch { A, B };

// p_0..p_K from the phi Taylor coefficients a_0..a_K (a_{-1} = 0,
// a_{K+1} = 0 convention).
Vec series_coefficients(SeriesBranch branch, const Vec& phi_coeffs,
                        const AdaptedFrameData& frame);

// Deviation of C(x) = ||grad c||^2_a + mu c^2 from its value at the
// chart center, relative: |C(x) - C(0)| / (1 + |C(0)|).
CheckReport c_invariant_report(const ScalarField& c, double mu, const MetricField& a,
                               int samples, std::uint64_t seed, double tol);

// Sup-norm of c_{i;j} + mu c a_ij per sample.
CheckReport closed_conformal_residual(const ScalarField& c, double mu,
                                      const MetricField& a, int samples,
                                      std::uint64_t seed, double tol);

// Finite-flow law for constant c: F(x(t), J(t) y) = e^{-2ct} F(x, y).
// x' = V(x), J' = DV(x) J, Dormand-Prince with local tolerance ode_tol.
// Trajectories that exit the chart truncate the grid (flagged).
struct FlowCheckResult {
  Vec deviations;  // one per evaluated grid point
  double max_deviation = 0.0;
  bool truncated = false;
};
FlowCheckResult flow_check(const FinslerMetric& f, const VectorField& v,
                           double c_const, std::span<const double> x,
                           std::span<const double> y, const Vec& t_grid,
                           double ode_tol = 1e-10);

}  // namespace cvf
