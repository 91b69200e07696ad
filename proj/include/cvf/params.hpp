#pragma once

#include <string>

#include "cvf/errors.hpp"
#include "cvf/linalg.hpp"

namespace cvf {

// Parameter bundle shared by all model families.  Which entries matter
// depends on the family; validation is per use.
struct ModelParams {
  double lambda = 0.0;
  double mu = 0.0;
  double tau = 0.0;
  Vec e;
  Vec gamma;
  Vec eta;
  Vec d;
  Mat Q;  // skew-symmetric when present
  double k1 = 0.0, k2 = 0.0, k3 = 0.0;
};

inline constexpr double kValidationTol = 1e-12;

// Zero-pad or reject a parameter vector against the model dimension.
Vec sized_vec(const Vec& v, int n, const std::string& name);
Mat sized_mat(const Mat& m, int n, const std::string& name);

// Throwing checks; each names its constraint in the error.
void validate_skew(const Mat& q);                      // ||Q + Q^T||inf
void validate_qe_zero(const Mat& q, const Vec& e);     // Qe = 0
void validate_killing_pair(const Mat& q, const Vec& gamma, const Vec& e,
                           double lambda);             // <gamma,e> = 0, Qe = -2 lambda gamma
void validate_k_triple(double k1, double k2, double k3);  // k2 != k1 k3

}  // namespace cvf
