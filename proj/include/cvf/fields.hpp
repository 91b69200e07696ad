#pragma once

#include <functional>
#include <span>
#include <vector>

#include "cvf/jet.hpp"
#include "cvf/linalg.hpp"

namespace cvf {

using JetVec = std::vector<Jet3>;

// Chart descriptor: ball |x - center| < radius, with the additional
// guard 1 + mu|x|^2 >= 0.25 when mu < 0 (chart boundary of the
// constant-curvature forms).
struct Domain {
  int dim = 0;
  Vec center;
  double radius = 0.5;
  double mu = 0.0;

  static Domain ball(int dim, double radius = 0.5, double mu = 0.0) {
    return Domain{dim, Vec(dim, 0.0), radius, mu};
  }
  bool contains(std::span<const double> x) const;
};

// Fields are pure evaluators over jets; the jet order of the output
// follows the order of the input seeds.
struct ScalarField {
  int dim = 0;
  std::function<Jet3(const JetVec&)> eval;
};

struct OneFormField {
  int dim = 0;
  std::function<JetVec(const JetVec&)> eval;  // components b_i
};

struct VectorField {
  int dim = 0;
  std::function<JetVec(const JetVec&)> eval;  // components V^i
};

struct MetricField {
  int dim = 0;
  Domain domain;
  std::function<JetMat(const JetVec&)> eval;  // a_ij, symmetric SPD
};

// Function of (x, y), jet-evaluable in each slot separately; the slot
// not being differentiated is passed as constants.
struct PhaseFunction {
  int dim = 0;
  std::function<Jet3(const JetVec& x, const JetVec& y)> eval;
};

Jet3 eval_scalar(const ScalarField& f, std::span<const double> x, int order);
JetVec eval_oneform(const OneFormField& f, std::span<const double> x, int order);
JetVec eval_vector(const VectorField& f, std::span<const double> x, int order);
JetMat eval_metric(const MetricField& a, std::span<const double> x, int order);

double scalar_value(const ScalarField& f, std::span<const double> x);
Vec oneform_value(const OneFormField& f, std::span<const double> x);
Vec vector_value(const VectorField& f, std::span<const double> x);
SymMatrix metric_value(const MetricField& a, std::span<const double> x);

// Jacobian J_ij = dV^i/dx^j.
Mat vector_jacobian(const VectorField& v, std::span<const double> x);

// Gradient of a scalar field (lower index).
Vec scalar_gradient(const ScalarField& f, std::span<const double> x);

// alpha^2(x,y) = a_ij y^i y^j and beta(x,y) = b_i y^i at plain points.
double alpha_sq_value(const MetricField& a, std::span<const double> x,
                      std::span<const double> y);
double beta_value(const OneFormField& b, std::span<const double> x,
                  std::span<const double> y);

// Ready-made fields.
ScalarField constant_scalar(int dim, double value);
VectorField zero_vector(int dim);
OneFormField zero_oneform(int dim);
OneFormField constant_oneform(Vec coeffs);
MetricField euclidean_metric(int dim);

// One-form x -> a_ij(x) V^j(x) (index lowered by the metric).
OneFormField lower_index(const MetricField& a, const VectorField& v);

}  // namespace cvf
