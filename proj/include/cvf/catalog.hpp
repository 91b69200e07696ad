#pragma once

#include <span>
#include <string>
#include <vector>

#include "cvf/fields.hpp"
#include "cvf/params.hpp"
#include "cvf/phi.hpp"

namespace cvf {

enum class CurvatureForm { projective, conformal };

// Constant sectional curvature mu on the ball chart:
//   projective: a_ij = [(1+mu|x|^2) d_ij - mu x_i x_j] / (1+mu|x|^2)^2
//   conformal:  a_ij = 4 d_ij / (1+mu|x|^2)^2
MetricField constant_curvature_metric(double mu, CurvatureForm form, int n);

// The conformally flat constant-curvature metric together with the
// closed conformal 1-form rho built from (lambda, mu, e):
//   p_i = 4 / (1+mu|x|^2)^2 { -2(lambda + mu<e,x>) x_i + (1+mu|x|^2) e_i }
struct ProjectivePair {
  MetricField h;
  OneFormField rho;
};
ProjectivePair projective_pair(double lambda, double mu, Vec e, int n);

// Vector field + conformal factor families, by stable identifier:
//   lemma22_cc, lemma22_cf, closed_i, closed_ii, thm2_i, thm2_ii
struct ConformalPair {
  VectorField V;
  ScalarField c;
};
ConformalPair conformal_field(const std::string& family, const ModelParams& p, int n);

// F = alpha phi(beta/alpha).
struct FinslerMetric {
  MetricField a;
  OneFormField b;
  PhiFunction phi;

  // Throws RegularityError when |s| exceeds phi.s_max, EvalError when
  // alpha^2 <= 0.
  double value(std::span<const double> x, std::span<const double> y) const;
  Jet3 value_jets(const JetVec& x, const JetVec& y) const;
  PhaseFunction as_phase() const;
};
FinslerMetric ab_metric(MetricField a, OneFormField b, PhiFunction phi);

// Prop 5.2 scalars at a point: beta(x,y), xi(x), tau(x).
struct RandersPointData {
  double beta;
  double xi;
  double tau;
};
RandersPointData randers_beta_prop52(double lambda, double mu, const Vec& e,
                                     std::span<const double> x,
                                     std::span<const double> y);

// Stable identifier table for the CLI.
struct CatalogEntry {
  std::string id;
  std::string params;
  std::string role;
};
const std::vector<CatalogEntry>& catalog_entries();

}  // namespace cvf
